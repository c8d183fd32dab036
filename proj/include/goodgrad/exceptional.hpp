#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace goodgrad {

enum class ExceptionalType { G2, F4, E6, E7, E8 };

ExceptionalType parse_exceptional_type(const std::string& name);
std::string exceptional_name(ExceptionalType t);
int exceptional_rank(ExceptionalType t);

/// A characteristic as laid out in the printed tables: chain nodes left to
/// right, plus the node drawn below the chain.
struct PrintedCharacteristic {
    std::vector<int> chain;
    int branch = 0;

    friend bool operator==(const PrintedCharacteristic&, const PrintedCharacteristic&) = default;
};

/// Bourbaki-ordered labels (alpha_1..alpha_r). The printed chain runs from
/// alpha_r down to alpha_3 and ends with alpha_1; the branch is alpha_2.
std::vector<int> bourbaki_labels(const PrintedCharacteristic& c);
PrintedCharacteristic printed_layout(ExceptionalType t, const std::vector<int>& labels);
/// Image under the E6 diagram automorphism (alpha_1 <-> alpha_6, alpha_3 <-> alpha_5).
std::vector<int> e6_mirror(const std::vector<int>& labels);

struct ExceptionalEntry {
    ExceptionalType algebra = ExceptionalType::G2;
    std::string orbit_label;
    /// False for orbits whose reductive centralizer has a centre but that have
    /// no table row; these admit only the Dynkin grading.
    bool printed = false;
    /// Every characteristic of the row, in printed order; the first is the
    /// Dynkin characteristic. Bourbaki labels.
    std::vector<std::vector<int>> row;
    /// Non-Dynkin characteristics (row minus its first entry, E6 mirrors
    /// appended when requested).
    std::vector<std::vector<int>> non_dynkin_characteristics;

    bool dynkin_only() const { return non_dynkin_characteristics.empty(); }
};

/// Throws std::invalid_argument for an unknown E-type orbit label. G2 and F4
/// accept any label and return an empty non-Dynkin list.
ExceptionalEntry exceptional_lookup(ExceptionalType t, const std::string& orbit, bool with_mirrors = false);
/// Orbit labels stored for the algebra, table order (empty for G2/F4).
std::vector<std::string> exceptional_orbits(ExceptionalType t);

std::uint64_t fnv1a64(const std::string& bytes);
/// Checksum of the embedded table file and the one recorded beside it.
std::uint64_t exceptional_table_checksum();
std::uint64_t exceptional_table_expected_checksum();

/// Positive roots of E6/E7/E8 in simple-root coordinates.
std::vector<std::vector<int>> exceptional_positive_roots(ExceptionalType t);
/// degree -> dim g_j for the grading with the given simple-root labels.
std::map<int, std::size_t> exceptional_grading_dims(ExceptionalType t, const std::vector<int>& labels);

/// Consistency of the stored tables: checksum, label range and length,
/// constant dim g_0 + dim g_1 within a row, non-increasing dim g_j for
/// j >= -1 in steps of 2, and no repeated characteristic (up to the E6
/// symmetry). Returns the problems found.
std::vector<std::string> verify_exceptional_tables();

}  // namespace goodgrad

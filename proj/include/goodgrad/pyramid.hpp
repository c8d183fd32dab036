#pragma once

#include "goodgrad/partition.hpp"
#include "goodgrad/power_series.hpp"
#include "goodgrad/rational.hpp"

#include <string>
#include <vector>

namespace goodgrad {

enum class Flavor { TypeA, Symplectic, Orthogonal };

/// How a row takes part in the nilpotent beyond its own horizontal arrows.
enum class RowKind {
    Full,        // complete progression, no extra arrows
    HalfUpper,   // right half of a split row; fed from its lower mirror
    HalfLower,   // left half of a split row; feeds its upper mirror
    PairedUpper, // row built from two unequal parts of odd multiplicity
    PairedLower,
    CenterFed,   // upper half row fed from the centre box v_0
    CenterFeed,  // lower half row feeding the centre box v_0
    Center,      // the single box (0,0) holding v_0
};

struct PyramidRow {
    int y = 1;
    Rational first;       // current first coordinate
    Rational base_first;  // first coordinate before any shift
    int boxes = 0;
    int part = 0;         // part of the partition the row belongs to
    RowKind kind = RowKind::Full;

    Rational last() const { return first + Rational(2 * (boxes - 1)); }
    friend bool operator==(const PyramidRow&, const PyramidRow&) = default;
};

struct Box {
    Rational x;
    Rational base_x;
    int y = 0;
    std::size_t row = 0;
    int pos = 0;  // 0-based position from the left inside the row
};

struct Pyramid {
    Flavor flavor = Flavor::TypeA;
    std::vector<PyramidRow> rows;
    /// Shift parameters: per-row shifts s_2..s_k for type A, the centre
    /// coordinates t_1..t_c (one per centre part) for the other flavors.
    std::vector<Rational> shifts;

    int size() const;
    /// Boxes in row order, left to right within a row.
    std::vector<Box> boxes() const;
    bool is_centrally_symmetric() const;
    /// Throws std::logic_error when a structural invariant fails.
    void check_invariants() const;
    friend bool operator==(const Pyramid&, const Pyramid&) = default;
};

// ---- type A ----

/// Pyramid with row j holding p_j boxes centred at -p_j+1, ..., p_j-1.
Pyramid symmetric_pyramid(const Partition& p);
/// Every pyramid with row lengths p, ordered lexicographically by shift vector.
std::vector<Pyramid> enumerate_pyramids(const Partition& p);
/// prod (2(p_i - p_{i+1}) + 1).
long pyramid_count(const Partition& p);
/// Coefficient n = number of pyramids of size n, by direct enumeration.
PowerSeries pyr_count_series(int max_n);

/// Unimodal compositions of n in lexicographic order.
std::vector<std::vector<int>> unimodal_compositions(int n);
bool is_unimodal(const std::vector<int>& u);
/// Column i (1-based) of height u_i at first coordinate -k+1+2(i-1).
Pyramid unimodal_to_pyramid(const std::vector<int>& u);
/// Column heights; throws std::invalid_argument if columns are not aligned.
std::vector<int> pyramid_to_unimodal(const Pyramid& p);

// ---- symplectic / orthogonal ----

/// The centrally symmetric pyramid SP(p). Throws for non-symplectic p.
Pyramid symplectic_base_pyramid(const Partition& p);
/// The centrally symmetric pyramid OP(p). Throws for non-orthogonal p.
Pyramid orthogonal_base_pyramid(const Partition& p);

/// Moves the upper rows of centre part i right by t[i] and the mirrored
/// lower rows left by t[i]. `centre` lists the centre parts in decreasing order.
Pyramid shift_center_parts(const Pyramid& base, const std::vector<int>& centre,
                           const std::vector<Rational>& t);

std::vector<Pyramid> symplectic_pyramids(const Partition& p);
std::vector<Pyramid> orthogonal_pyramids(const Partition& p);

/// ASCII drawing, highest row first, one "[  ]" cell per box.
std::string render_pyramid(const Pyramid& p);

std::string flavor_name(Flavor f);

}  // namespace goodgrad

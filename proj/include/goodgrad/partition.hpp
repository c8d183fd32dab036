#pragma once

#include "goodgrad/lie_algebra.hpp"

#include <string>
#include <vector>

namespace goodgrad {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts arbitrary positive parts into decreasing order.
    static Partition sorted(std::vector<int> parts);
    /// Parses "3,1,1". Throws std::invalid_argument.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int total() const;
    bool empty() const { return parts_.empty(); }

    /// Part i (1-based) with implicit trailing zeros.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    /// Distinct parts in decreasing order.
    std::vector<int> distinct_parts() const;
    std::size_t multiplicity(int j) const;

    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition dual_partition(const Partition& p);

/// dim of the GL_n orbit: n^2 - sum (p*_i)^2.
long orbit_dimension(const Partition& p);

/// Odd parts occur with even multiplicity.
bool is_symplectic(const Partition& p);
/// Even parts occur with even multiplicity.
bool is_orthogonal(const Partition& p);

/// Throws std::invalid_argument when p does not label a nilpotent orbit of g.
void check_partition_for(const AlgebraSpec& spec, const Partition& p);

/// Parts of p contributing to the centre of the reductive centralizer
/// (SL: every distinct part, SP: even parts of multiplicity 2, SO: odd
/// parts of multiplicity 2), decreasing.
std::vector<int> center_parts(const AlgebraSpec& spec, const Partition& p);
/// Dimension c(p) of that centre.
int center_dim(const AlgebraSpec& spec, const Partition& p);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> symplectic_partitions(int n);
std::vector<Partition> orthogonal_partitions(int n);
/// All compositions of n, lexicographically increasing.
std::vector<std::vector<int>> compositions_of(int n);

/// Parses "2,1,2" into positive integers. Throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace goodgrad

#pragma once

#include "goodgrad/lie_algebra.hpp"
#include "goodgrad/partition.hpp"
#include "goodgrad/pyramid.hpp"

#include <map>
#include <string>
#include <vector>

namespace goodgrad {

/// Signed basis label (1..n, 0, -1..-n; 1..N for type A) of every box,
/// in Pyramid::boxes() order.
std::vector<int> box_labels(const AlgebraSpec& spec, const Pyramid& p);

/// Nilpotent acting along the rows, plus the cross maps of split rows.
Matrix nilpotent_of_pyramid(const AlgebraSpec& spec, const Pyramid& p);
/// Diagonal of first coordinates; traceless for SL.
GradingElement grading_of_pyramid(const AlgebraSpec& spec, const Pyramid& p);

/// Jordan block sizes of a nilpotent matrix. Throws if x is not nilpotent.
Partition jordan_type(const Matrix& x);

struct GoodPair {
    GradingElement h;
    Matrix e;
    bool verified = false;
    /// degree -> dim of the centralizer part in that degree (integral gradings only)
    std::map<Rational, std::size_t> centralizer_degrees;
};

/// Reusable goodness test for a fixed nilpotent e across many H.
class GoodnessChecker {
public:
    /// Throws std::invalid_argument if e is zero or not in g.
    GoodnessChecker(const AlgebraBasis& g, Matrix e);

    /// Throws std::invalid_argument if e is not homogeneous of degree 2
    /// under H; throws VerificationError if the two goodness certificates
    /// disagree.
    GoodPair check(const GradingElement& h) const;
    /// check(h).verified, but returns false instead of throwing when e is
    /// not of degree 2.
    bool is_good_grading(const GradingElement& h) const;
    /// True iff every nonzero entry e_ab sits in degree h_a - h_b = 2.
    bool has_degree_two(const GradingElement& h) const;

    const AlgebraBasis& algebra() const { return g_; }
    const Matrix& nilpotent() const { return e_; }
    std::size_t centralizer_dim() const { return centralizer_dim_; }

private:
    std::size_t kernel_dim(const std::vector<std::size_t>& subset) const;

    const AlgebraBasis& g_;
    Matrix e_;
    std::vector<Vector> images_;  // flattened [e, X_k]
    std::size_t centralizer_dim_ = 0;
};

GoodPair is_good(const AlgebraBasis& g, const GradingElement& h, const Matrix& e);

/// Labels of the simple roots, Bourbaki order. For type D the two fork
/// labels are stored larger first, since diagram symmetry swaps them.
struct Characteristic {
    char type = 'A';
    int rank = 0;
    std::vector<int> labels;

    bool fork_unordered() const { return type == 'D'; }
    std::string diagram() const { return std::string(1, type) + std::to_string(rank); }
    std::string to_string() const;
    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

/// Root system type and rank of g (A_{N-1}, B_n, C_n, D_n).
std::pair<char, int> root_system(const AlgebraSpec& spec);

/// Degrees of the simple roots after moving H into the dominant chamber.
/// Throws std::invalid_argument for non-integral gradings.
Characteristic characteristic_of(const AlgebraBasis& g, const GradingElement& h);
/// Same labels from the column heights of a pyramid.
Characteristic characteristic_from_pyramid(const AlgebraSpec& spec, const Pyramid& p);
/// Dominant diagonal element with the given simple-root labels.
GradingElement grading_from_characteristic(const AlgebraSpec& spec, const std::vector<int>& labels);

/// Nondegeneracy of <a,b> = tr(e[a,b]) on g_{-1}. Throws unless the pair is good.
bool check_duality_form(const AlgebraBasis& g, const GradingElement& h, const Matrix& e);
/// No nonzero vector of g_1 is killed by the diagonal part of g^e.
/// GL/SL only; throws std::invalid_argument otherwise or if the pair is not good.
bool check_torus_weights(const AlgebraBasis& g, const GradingElement& h, const Matrix& e);

}  // namespace goodgrad

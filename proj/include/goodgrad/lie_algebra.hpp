#pragma once

#include "goodgrad/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace goodgrad {

enum class Family { GL, SL, SP, SO };

/// A classical matrix Lie algebra, identified by family and matrix size N.
struct AlgebraSpec {
    Family family = Family::GL;
    int size = 1;  // N

    static AlgebraSpec gl(int n) { return {Family::GL, n}; }
    static AlgebraSpec sl(int n) { return {Family::SL, n}; }
    static AlgebraSpec sp(int n) { return {Family::SP, n}; }
    static AlgebraSpec so(int n) { return {Family::SO, n}; }

    /// Throws std::invalid_argument for sizes the family does not allow.
    void validate() const;

    bool is_type_a() const { return family == Family::GL || family == Family::SL; }
    /// n for SP_{2n} / SO_{2n} / SO_{2n+1}.
    int half() const { return size / 2; }
    bool has_zero_vector() const { return family == Family::SO && size % 2 == 1; }
    /// Matrix index of the basis vector v_label, label in {1..n, 0, -1..-n}.
    std::size_t index_of(int label) const;
    /// Inverse of index_of; for GL/SL returns index + 1.
    int label_of(std::size_t index) const;
    /// Matrix index of the form-partner of an index (v_i <-> v_{-i}).
    std::size_t partner(std::size_t index) const;

    std::string name() const;
    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Fixed ordered basis of g made of ad(diagonal)-weight vectors. Basis
/// element k has weight h[weights[k].first] - h[weights[k].second] under
/// any diagonal H in g.
class AlgebraBasis {
public:
    explicit AlgebraBasis(AlgebraSpec spec);

    const AlgebraSpec& spec() const { return spec_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t matrix_size() const { return static_cast<std::size_t>(spec_.size); }
    const std::vector<Matrix>& basis() const { return basis_; }
    const Matrix& operator[](std::size_t k) const { return basis_[k]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& weights() const { return weights_; }
    /// Names of the underlying basis vectors: v_1..v_n,(v_0),v_{-1}..v_{-n}.
    const std::vector<std::string>& index_labels() const { return index_labels_; }
    /// Gram matrix of the invariant form on V (identity for GL/SL).
    const Matrix& gram() const { return gram_; }

    /// Defining equations of the family (trace, form compatibility).
    bool contains(const Matrix& x) const;
    /// Span of the flattened basis matrices inside Q^{N*N}.
    Subspace flattened_span() const;
    /// Combination sum_k coords[k] * basis[k].
    Matrix combine(const Vector& coords) const;

private:
    AlgebraSpec spec_;
    Matrix gram_;
    std::vector<Matrix> basis_;
    std::vector<std::pair<std::size_t, std::size_t>> weights_;
    std::vector<std::string> index_labels_;
};

AlgebraBasis build_algebra(AlgebraSpec spec);

/// Gram matrix of the invariant form on V (identity for GL/SL).
Matrix gram_matrix(const AlgebraSpec& spec);
/// Adjoint with respect to the form, sigma(X) = -J^{-1} X^T J; g is its
/// fixed-point set for SP/SO.
Matrix form_involution(const AlgebraSpec& spec, const Matrix& x);

/// Commutator ab - ba. Throws std::invalid_argument on size mismatch.
Matrix bracket(const Matrix& a, const Matrix& b);

/// {x in g : [e,x] = 0} in basis coordinates. Throws if e is not in g.
Subspace centralizer(const AlgebraBasis& g, const Matrix& e);

/// Diagonal element of g whose ad-eigenspaces define a grading.
struct GradingElement {
    AlgebraSpec spec;
    Vector diagonal;

    /// Throws std::invalid_argument unless the diagonal lies in g.
    void validate() const;
    Matrix matrix() const { return Matrix::diagonal(diagonal); }
    /// Subtracts the scalar part (trace / N) so the element is traceless.
    GradingElement traceless() const;
    friend bool operator==(const GradingElement&, const GradingElement&) = default;
};

struct GradedDecomposition {
    /// degree -> subspace of g in basis coordinates
    std::map<Rational, Subspace> pieces;
    /// degree -> indices of basis elements spanning that piece
    std::map<Rational, std::vector<std::size_t>> indices;

    std::vector<Rational> degrees() const;
    std::size_t dim(const Rational& degree) const;
    bool is_integral() const;
};

/// Degree of basis element k under the diagonal element H.
Rational basis_degree(const AlgebraBasis& g, const GradingElement& h, std::size_t k);

GradedDecomposition graded_decomposition(const AlgebraBasis& g, const GradingElement& h);

}  // namespace goodgrad

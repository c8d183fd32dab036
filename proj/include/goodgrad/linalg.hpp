#pragma once

#include "goodgrad/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace goodgrad {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Rational> d);
    /// Matrix unit E_{r,c}.
    static Matrix unit(std::size_t n, std::size_t r, std::size_t c);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Rational trace() const;
    Matrix transpose() const;
    /// Entries in row-major order.
    const Vector& flat() const { return data_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Vector operator*(const Vector& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

/// Subspace of Q^n stored by its reduced row echelon basis. Two equal
/// subspaces always hold identical bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
    /// Span of arbitrary (possibly dependent) vectors.
    static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    /// Throws std::invalid_argument on dimension mismatch.
    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);
/// Rank of the matrix whose columns are `columns`.
std::size_t rank_of_columns(std::span<const Vector> columns);
Subspace kernel(const Matrix& m);
bool solve_membership(const Subspace& s, const Vector& v);

}  // namespace goodgrad

#include "goodgrad/linalg.hpp"

#include <stdexcept>

namespace goodgrad {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c) {
    Matrix m(n, n);
    m(r, c) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Rational Matrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
            }
        }
    }
    return p;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        }
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy).size();
}

namespace {

// Incremental echelon reduction of a vector family; each kept row has a
// leading 1 at its pivot and zeros at the pivots of earlier rows.
class Echelon {
public:
    explicit Echelon(std::size_t n) : n_(n) {}

    bool insert(Vector v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& f = v[pivots_[k]];
            if (f.is_zero()) continue;
            const Rational factor = f;
            for (std::size_t c = 0; c < n_; ++c) {
                if (!rows_[k][c].is_zero()) v[c] -= factor * rows_[k][c];
            }
        }
        std::size_t p = 0;
        while (p < n_ && v[p].is_zero()) ++p;
        if (p == n_) return false;
        const Rational inv = Rational(1) / v[p];
        for (auto& x : v) {
            if (!x.is_zero()) x *= inv;
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    std::size_t size() const { return rows_.size(); }
    std::vector<Vector>& rows() { return rows_; }

private:
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace

std::size_t rank_of_columns(std::span<const Vector> columns) {
    if (columns.empty()) return 0;
    Echelon e(columns.front().size());
    for (const auto& c : columns) {
        if (c.size() != columns.front().size()) throw std::invalid_argument("vector length mismatch");
        e.insert(c);
    }
    return e.size();
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    Matrix m(vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient_dim) throw std::invalid_argument("vector length mismatch");
        for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
    }
    const auto pivots = rref(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        s.basis_.emplace_back(m.flat().begin() + static_cast<std::ptrdiff_t>(r * ambient_dim),
                              m.flat().begin() + static_cast<std::ptrdiff_t>((r + 1) * ambient_dim));
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vector> units;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vector v(ambient_dim);
        v[i] = 1;
        units.push_back(std::move(v));
    }
    return span(ambient_dim, units);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim_) {
        throw std::invalid_argument("membership test: dimension mismatch");
    }
    Vector w = v;
    // Basis is in reduced echelon form: eliminate along each leading entry.
    for (const auto& b : basis_) {
        std::size_t p = 0;
        while (b[p].is_zero()) ++p;
        if (w[p].is_zero()) continue;
        const Rational f = w[p];
        for (std::size_t c = p; c < ambient_dim_; ++c) {
            if (!b[c].is_zero()) w[c] -= f * b[c];
        }
    }
    for (const auto& x : w) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Subspace kernel(const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vecs);
}

bool solve_membership(const Subspace& s, const Vector& v) { return s.contains(v); }

}  // namespace goodgrad

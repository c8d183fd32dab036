#include "goodgrad/lie_algebra.hpp"

#include <stdexcept>

namespace goodgrad {

void AlgebraSpec::validate() const {
    switch (family) {
        case Family::GL:
            if (size < 1) throw std::invalid_argument("gl_N needs N >= 1");
            break;
        case Family::SL:
            if (size < 2) throw std::invalid_argument("sl_N needs N >= 2");
            break;
        case Family::SP:
            if (size < 2 || size % 2 != 0) throw std::invalid_argument("sp_N needs even N >= 2");
            break;
        case Family::SO:
            if (size < 3) throw std::invalid_argument("so_N needs N >= 3");
            break;
    }
}

std::size_t AlgebraSpec::index_of(int label) const {
    if (is_type_a()) {
        if (label < 1 || label > size) throw std::out_of_range("basis label out of range");
        return static_cast<std::size_t>(label - 1);
    }
    const int n = half();
    const int odd = has_zero_vector() ? 1 : 0;
    if (label >= 1 && label <= n) return static_cast<std::size_t>(label - 1);
    if (label == 0 && odd) return static_cast<std::size_t>(n);
    if (label <= -1 && label >= -n) return static_cast<std::size_t>(n + odd - label - 1);
    throw std::out_of_range("basis label out of range");
}

int AlgebraSpec::label_of(std::size_t index) const {
    const int i = static_cast<int>(index);
    if (is_type_a()) return i + 1;
    const int n = half();
    const int odd = has_zero_vector() ? 1 : 0;
    if (i < n) return i + 1;
    if (odd && i == n) return 0;
    return -(i - n - odd + 1);
}

std::size_t AlgebraSpec::partner(std::size_t index) const { return index_of(-label_of(index)); }

std::string AlgebraSpec::name() const {
    const std::string n = std::to_string(size);
    switch (family) {
        case Family::GL: return "gl_" + n;
        case Family::SL: return "sl_" + n;
        case Family::SP: return "sp_" + n;
        case Family::SO: return "so_" + n;
    }
    return "?";
}

namespace {

std::string vector_label(const AlgebraSpec& spec, std::size_t index) {
    return "v_" + std::to_string(spec.label_of(index));
}

}  // namespace

AlgebraBasis::AlgebraBasis(AlgebraSpec spec) : spec_(spec) {
    spec_.validate();
    const std::size_t n = matrix_size();
    for (std::size_t i = 0; i < n; ++i) index_labels_.push_back(vector_label(spec_, i));

    if (spec_.is_type_a()) {
        gram_ = Matrix::identity(n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b && spec_.family == Family::SL) continue;
                basis_.push_back(Matrix::unit(n, a, b));
                weights_.emplace_back(a, b);
            }
        }
        if (spec_.family == Family::SL) {
            for (std::size_t a = 0; a + 1 < n; ++a) {
                Matrix h = Matrix::unit(n, a, a) - Matrix::unit(n, a + 1, a + 1);
                basis_.push_back(std::move(h));
                weights_.emplace_back(a, a);
            }
        }
        return;
    }

    gram_ = gram_matrix(spec_);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t pa = spec_.partner(a);
            const std::size_t pb = spec_.partner(b);
            // sigma(E_ab) is a multiple of E_{pb, pa}
            if (std::make_pair(pb, pa) < std::make_pair(a, b)) continue;
            const Matrix e = Matrix::unit(n, a, b);
            Matrix x = e + form_involution(spec_, e);
            if (x.is_zero()) continue;
            if (pb == a && pa == b) {
                x *= Rational(1, 2);
            }
            basis_.push_back(std::move(x));
            weights_.emplace_back(a, b);
        }
    }
}

bool AlgebraBasis::contains(const Matrix& x) const {
    if (x.rows() != matrix_size() || x.cols() != matrix_size()) return false;
    switch (spec_.family) {
        case Family::GL: return true;
        case Family::SL: return x.trace().is_zero();
        case Family::SP:
        case Family::SO: return (x.transpose() * gram_ + gram_ * x).is_zero();
    }
    return false;
}

Subspace AlgebraBasis::flattened_span() const {
    std::vector<Vector> flat;
    flat.reserve(basis_.size());
    for (const auto& m : basis_) flat.push_back(m.flat());
    return Subspace::span(matrix_size() * matrix_size(), flat);
}

Matrix AlgebraBasis::combine(const Vector& coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate length mismatch");
    Matrix m(matrix_size(), matrix_size());
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) m += basis_[k] * coords[k];
    }
    return m;
}

AlgebraBasis build_algebra(AlgebraSpec spec) { return AlgebraBasis(spec); }

Matrix gram_matrix(const AlgebraSpec& spec) {
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.size);
    if (spec.is_type_a()) return Matrix::identity(n);
    // (v_i, v_{-j}) = delta_ij, symmetric for SO and skew for SP
    Matrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, spec.partner(i)) = (spec.family == Family::SP && spec.label_of(i) < 0) ? -1 : 1;
    }
    return j;
}

Matrix form_involution(const AlgebraSpec& spec, const Matrix& x) {
    const Matrix j = gram_matrix(spec);
    // J^{-1} = J for the symmetric form and -J for the skew one
    const Matrix j_inv = spec.family == Family::SP ? j * Rational(-1) : j;
    return j_inv * x.transpose() * j * Rational(-1);
}

Matrix bracket(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
        throw std::invalid_argument("bracket: size mismatch");
    }
    return a * b - b * a;
}

Subspace centralizer(const AlgebraBasis& g, const Matrix& e) {
    if (!g.contains(e)) throw std::invalid_argument("centralizer: element not in " + g.spec().name());
    std::vector<Vector> images;
    images.reserve(g.dim());
    for (const auto& x : g.basis()) images.push_back(bracket(e, x).flat());
    return kernel(Matrix::from_columns(g.matrix_size() * g.matrix_size(), images));
}

void GradingElement::validate() const {
    spec.validate();
    if (diagonal.size() != static_cast<std::size_t>(spec.size)) {
        throw std::invalid_argument("grading element: diagonal length differs from N");
    }
    switch (spec.family) {
        case Family::GL: return;
        case Family::SL: {
            Rational s;
            for (const auto& d : diagonal) s += d;
            if (!s.is_zero()) throw std::invalid_argument("grading element not traceless");
            return;
        }
        case Family::SP:
        case Family::SO:
            for (std::size_t i = 0; i < diagonal.size(); ++i) {
                if (diagonal[spec.partner(i)] != -diagonal[i]) {
                    throw std::invalid_argument("grading element not compatible with the form");
                }
            }
            return;
    }
}

GradingElement GradingElement::traceless() const {
    Rational s;
    for (const auto& d : diagonal) s += d;
    const Rational shift = s / Rational(static_cast<long>(diagonal.size()));
    GradingElement out = *this;
    for (auto& d : out.diagonal) d -= shift;
    return out;
}

std::vector<Rational> GradedDecomposition::degrees() const {
    std::vector<Rational> out;
    for (const auto& [d, _] : pieces) out.push_back(d);
    return out;
}

std::size_t GradedDecomposition::dim(const Rational& degree) const {
    auto it = indices.find(degree);
    return it == indices.end() ? 0 : it->second.size();
}

bool GradedDecomposition::is_integral() const {
    for (const auto& [d, _] : pieces) {
        if (!d.is_integer()) return false;
    }
    return true;
}

Rational basis_degree(const AlgebraBasis& g, const GradingElement& h, std::size_t k) {
    const auto [a, b] = g.weights()[k];
    return h.diagonal[a] - h.diagonal[b];
}

GradedDecomposition graded_decomposition(const AlgebraBasis& g, const GradingElement& h) {
    if (h.spec != g.spec()) throw std::invalid_argument("grading element belongs to another algebra");
    h.validate();
    GradedDecomposition out;
    for (std::size_t k = 0; k < g.dim(); ++k) out.indices[basis_degree(g, h, k)].push_back(k);
    for (const auto& [deg, idx] : out.indices) {
        std::vector<Vector> units;
        for (auto k : idx) {
            Vector v(g.dim());
            v[k] = 1;
            units.push_back(std::move(v));
        }
        out.pieces.emplace(deg, Subspace::span(g.dim(), units));
    }
    return out;
}

}  // namespace goodgrad

#include "goodgrad/grading.hpp"

#include "goodgrad/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace goodgrad {

namespace {

void check_flavor(const AlgebraSpec& spec, const Pyramid& p) {
    spec.validate();
    const bool ok = (p.flavor == Flavor::TypeA && spec.is_type_a()) ||
                    (p.flavor == Flavor::Symplectic && spec.family == Family::SP) ||
                    (p.flavor == Flavor::Orthogonal && spec.family == Family::SO);
    if (!ok) throw std::invalid_argument(flavor_name(p.flavor) + " pyramid does not fit " + spec.name());
    if (p.size() != spec.size) {
        throw std::invalid_argument("pyramid has " + std::to_string(p.size()) + " boxes, expected " +
                                    std::to_string(spec.size));
    }
}

using Point = std::pair<Rational, int>;

}  // namespace

std::vector<int> box_labels(const AlgebraSpec& spec, const Pyramid& p) {
    check_flavor(spec, p);
    const auto boxes = p.boxes();
    std::vector<int> labels(boxes.size(), 0);
    if (p.flavor == Flavor::TypeA) {
        for (std::size_t i = 0; i < boxes.size(); ++i) labels[i] = static_cast<int>(i) + 1;
        return labels;
    }
    std::map<Point, std::size_t> where;
    for (std::size_t i = 0; i < boxes.size(); ++i) where[{boxes[i].base_x, boxes[i].y}] = i;
    std::vector<bool> done(boxes.size(), false);
    int next = 1;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& b = boxes[i];
        const bool positive = b.base_x.sign() > 0 || (b.base_x.is_zero() && b.y > 0);
        if (!positive) continue;
        const auto mirror = where.find({-b.base_x, -b.y});
        if (mirror == where.end()) throw std::logic_error("pyramid box without mirror image");
        labels[i] = next;
        labels[mirror->second] = -next;
        done[i] = done[mirror->second] = true;
        ++next;
    }
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (done[i]) continue;
        if (!(boxes[i].base_x.is_zero() && boxes[i].y == 0) || !spec.has_zero_vector()) {
            throw std::logic_error("pyramid box left unlabelled");
        }
    }
    if (next - 1 != spec.half()) throw std::logic_error("pyramid labelling does not cover the basis");
    return labels;
}

Matrix nilpotent_of_pyramid(const AlgebraSpec& spec, const Pyramid& p) {
    const auto labels = box_labels(spec, p);
    const auto boxes = p.boxes();
    const auto n = static_cast<std::size_t>(spec.size);
    auto index = [&](std::size_t box) { return spec.index_of(labels[box]); };

    // arrows as (source box, target box)
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::map<Point, std::size_t> where;
    for (std::size_t i = 0; i < boxes.size(); ++i) where[{boxes[i].base_x, boxes[i].y}] = i;
    auto at = [&](const Rational& x, int y) {
        auto it = where.find({x, y});
        if (it == where.end()) throw std::logic_error("pyramid is missing a box needed by the nilpotent");
        return it->second;
    };

    for (const auto& r : p.rows) {
        const Rational last = r.base_first + Rational(2 * (r.boxes - 1));
        switch (r.kind) {
            case RowKind::HalfLower:
                arrows.emplace_back(at(last, r.y), at(Rational(1), -r.y));
                break;
            case RowKind::PairedLower:
                arrows.emplace_back(at(Rational(0), r.y), at(Rational(2), -r.y));
                break;
            case RowKind::CenterFeed:
                arrows.emplace_back(at(last, r.y), at(Rational(0), 0));
                arrows.emplace_back(at(Rational(0), 0), at(Rational(2), -r.y));
                break;
            default:
                break;
        }
    }
    auto horizontal = [&](const PyramidRow& r, bool only_right_half, bool only_left_half) {
        for (int k = 0; k + 1 < r.boxes; ++k) {
            const Rational x = r.base_first + Rational(2 * k);
            if (only_right_half && x.sign() < 0) continue;
            if (only_left_half && x.sign() >= 0) continue;
            arrows.emplace_back(at(x, r.y), at(x + Rational(2), r.y));
        }
    };
    for (const auto& r : p.rows) {
        if (p.flavor == Flavor::TypeA || r.y > 0) horizontal(r, false, false);
    }
    for (const auto& r : p.rows) {
        if (p.flavor != Flavor::TypeA && r.y == 0) horizontal(r, true, false);
    }
    for (const auto& r : p.rows) {
        if (p.flavor != Flavor::TypeA && r.y == 0) horizontal(r, false, true);
    }
    for (const auto& r : p.rows) {
        if (p.flavor != Flavor::TypeA && r.y < 0) horizontal(r, false, false);
    }

    Matrix e(n, n);
    if (spec.is_type_a()) {
        for (const auto& [src, dst] : arrows) e(index(dst), index(src)) += 1;
        return e;
    }
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (const auto& [src, dst] : arrows) {
        const std::size_t a = index(dst);
        const std::size_t b = index(src);
        if (covered.count({a, b})) continue;
        const Matrix unit = Matrix::unit(n, a, b);
        const Matrix image = form_involution(spec, unit);
        const std::pair<std::size_t, std::size_t> mirror{spec.partner(b), spec.partner(a)};
        if (mirror == std::make_pair(a, b)) {
            if (image != unit) throw std::logic_error("self-mirrored arrow is not in the algebra");
            e += unit;
        } else {
            e += unit + image;
        }
        covered.insert({a, b});
        covered.insert(mirror);
    }
    return e;
}

GradingElement grading_of_pyramid(const AlgebraSpec& spec, const Pyramid& p) {
    const auto labels = box_labels(spec, p);
    const auto boxes = p.boxes();
    GradingElement h{spec, Vector(static_cast<std::size_t>(spec.size))};
    for (std::size_t i = 0; i < boxes.size(); ++i) h.diagonal[spec.index_of(labels[i])] = boxes[i].x;
    if (spec.family == Family::SL) h = h.traceless();
    h.validate();
    return h;
}

Partition jordan_type(const Matrix& x) {
    if (!x.is_square()) throw std::invalid_argument("jordan_type needs a square matrix");
    const std::size_t n = x.rows();
    std::vector<std::size_t> ranks{n};
    Matrix power = Matrix::identity(n);
    while (ranks.back() > 0) {
        if (ranks.size() > n) throw std::invalid_argument("matrix is not nilpotent");
        power = power * x;
        const std::size_t r = rank(power);
        if (r == ranks.back()) throw std::invalid_argument("matrix is not nilpotent");
        ranks.push_back(r);
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<int> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    return dual_partition(Partition(at_least));
}

// ------------------------------------------------------------- goodness

GoodnessChecker::GoodnessChecker(const AlgebraBasis& g, Matrix e) : g_(g), e_(std::move(e)) {
    if (!g_.contains(e_)) throw std::invalid_argument("nilpotent is not in " + g_.spec().name());
    if (e_.is_zero()) throw std::invalid_argument("a good element must be nonzero");
    images_.reserve(g_.dim());
    for (const auto& x : g_.basis()) images_.push_back(bracket(e_, x).flat());
    centralizer_dim_ = g_.dim() - rank_of_columns(images_);
}

std::size_t GoodnessChecker::kernel_dim(const std::vector<std::size_t>& subset) const {
    std::vector<Vector> cols;
    cols.reserve(subset.size());
    for (auto k : subset) cols.push_back(images_[k]);
    return subset.size() - rank_of_columns(cols);
}

bool GoodnessChecker::has_degree_two(const GradingElement& h) const {
    for (std::size_t a = 0; a < e_.rows(); ++a) {
        for (std::size_t b = 0; b < e_.cols(); ++b) {
            if (!e_(a, b).is_zero() && h.diagonal[a] - h.diagonal[b] != Rational(2)) return false;
        }
    }
    return true;
}

GoodPair GoodnessChecker::check(const GradingElement& h) const {
    if (h.spec != g_.spec()) throw std::invalid_argument("grading element belongs to another algebra");
    h.validate();
    if (!has_degree_two(h)) throw std::invalid_argument("nilpotent is not homogeneous of degree 2");
    GoodPair out{h, e_, false, {}};
    std::map<Rational, std::vector<std::size_t>> pieces;
    for (std::size_t k = 0; k < g_.dim(); ++k) pieces[basis_degree(g_, h, k)].push_back(k);
    for (const auto& [deg, idx] : pieces) {
        if (!deg.is_integer()) return out;
    }
    std::size_t total = 0;
    bool injective_below = true;
    for (const auto& [deg, idx] : pieces) {
        const std::size_t k = kernel_dim(idx);
        if (k > 0) out.centralizer_degrees[deg] = k;
        total += k;
        if (deg <= Rational(-1) && k > 0) injective_below = false;
    }
    if (total != centralizer_dim_) {
        throw VerificationError("graded centralizer dimensions do not add up to dim g^e");
    }
    const std::size_t dim0 = pieces.count(Rational(0)) ? pieces.at(Rational(0)).size() : 0;
    const std::size_t dim_minus1 = pieces.count(Rational(-1)) ? pieces.at(Rational(-1)).size() : 0;
    const bool dimension_identity = centralizer_dim_ == dim0 + dim_minus1;
    if (dimension_identity != injective_below) {
        throw VerificationError("dimension identity and per-degree injectivity disagree");
    }
    out.verified = dimension_identity;
    return out;
}

bool GoodnessChecker::is_good_grading(const GradingElement& h) const {
    return has_degree_two(h) && check(h).verified;
}

GoodPair is_good(const AlgebraBasis& g, const GradingElement& h, const Matrix& e) {
    return GoodnessChecker(g, e).check(h);
}

// -------------------------------------------------------- characteristic

std::string Characteristic::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(labels[i]);
    }
    return s;
}

std::pair<char, int> root_system(const AlgebraSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::GL:
        case Family::SL: return {'A', spec.size - 1};
        case Family::SP: return {'C', spec.half()};
        case Family::SO: return {spec.size % 2 ? 'B' : 'D', spec.half()};
    }
    return {'?', 0};
}

namespace {

int to_label(const Rational& r) {
    if (!r.is_integer()) throw std::invalid_argument("grading is not integral");
    return static_cast<int>(r.to_long());
}

void order_fork(Characteristic& c) {
    if (c.type == 'D' && c.rank >= 2) {
        auto& l = c.labels;
        if (l[c.rank - 2] < l[c.rank - 1]) std::swap(l[c.rank - 2], l[c.rank - 1]);
    }
}

}  // namespace

Characteristic characteristic_of(const AlgebraBasis& g, const GradingElement& h) {
    const AlgebraSpec& spec = g.spec();
    if (h.spec != spec) throw std::invalid_argument("grading element belongs to another algebra");
    h.validate();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        if (!basis_degree(g, h, k).is_integer()) throw std::invalid_argument("grading is not integral");
    }
    const auto [type, r] = root_system(spec);
    Characteristic c{type, r, {}};
    if (spec.is_type_a()) {
        Vector d = h.diagonal;
        std::sort(d.begin(), d.end(), std::greater<>());
        for (std::size_t i = 0; i + 1 < d.size(); ++i) c.labels.push_back(to_label(d[i] - d[i + 1]));
        return c;
    }
    const int n = spec.half();
    Vector d;
    int negatives = 0;
    bool has_zero = false;
    for (int i = 1; i <= n; ++i) {
        const Rational& x = h.diagonal[spec.index_of(i)];
        negatives += x.sign() < 0 ? 1 : 0;
        has_zero = has_zero || x.is_zero();
        d.push_back(abs(x));
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    for (int i = 0; i + 1 < n; ++i) c.labels.push_back(to_label(d[i] - d[i + 1]));
    switch (type) {
        case 'C': c.labels.push_back(to_label(Rational(2) * d[n - 1])); break;
        case 'B': c.labels.push_back(to_label(d[n - 1])); break;
        default: {
            // Weyl group of D_n changes an even number of signs
            if (negatives % 2 == 1 && !has_zero) d[n - 1] = -d[n - 1];
            if (n == 1) throw std::logic_error("D_1 has no roots");
            c.labels.back() = to_label(d[n - 2] - d[n - 1]);
            c.labels.push_back(to_label(d[n - 2] + d[n - 1]));
            order_fork(c);
        }
    }
    return c;
}

Characteristic characteristic_from_pyramid(const AlgebraSpec& spec, const Pyramid& p) {
    check_flavor(spec, p);
    const auto [type, r] = root_system(spec);
    Characteristic c{type, r, {}};
    std::map<Rational, int> h;
    for (const auto& b : p.boxes()) h[b.x] += 1;
    auto count = [&](const Rational& x) {
        auto it = h.find(x);
        return it == h.end() ? 0 : it->second;
    };
    if (p.flavor == Flavor::TypeA) {
        const Rational lo = h.begin()->first;
        const Rational hi = h.rbegin()->first;
        for (Rational x = lo; x <= hi; x += 1) {
            const int hx = count(x);
            if (hx == 0) continue;
            for (int i = 0; i + 1 < hx; ++i) c.labels.push_back(0);
            if (x < hi) c.labels.push_back(count(x + 1) == 0 ? 2 : 1);
        }
        std::reverse(c.labels.begin(), c.labels.end());
        return c;
    }
    const Rational hi = h.rbegin()->first;
    const bool half_shift = !hi.is_integer();
    const Rational lowest = half_shift ? Rational(1, 2) : Rational(1);
    for (Rational x = hi; x >= lowest; x -= 1) {
        const int hx = count(x);
        if (hx == 0) continue;
        for (int i = 0; i + 1 < hx; ++i) c.labels.push_back(0);
        if (half_shift && x == lowest) {
            c.labels.push_back(1);
        } else {
            c.labels.push_back(count(x - 1) == 0 ? 2 : 1);
        }
    }
    // a lone box at 1/2 puts d_{n-1} - 1/2 and d_{n-1} + 1/2 on the two fork nodes
    if (half_shift && type == 'D' && count(lowest) == 1 && c.labels.size() >= 2) {
        c.labels.back() = c.labels[c.labels.size() - 2] + 1;
    }
    if (!half_shift) {
        const int ell = count(Rational(0)) / 2;
        for (int i = 0; i < ell; ++i) c.labels.push_back(0);
        // with a single zero pair the fork node sees d_{n-1} + 0, not 0
        if (type == 'D' && ell == 1 && c.labels.size() >= 2) c.labels.back() = c.labels[c.labels.size() - 2];
    }
    if (c.labels.size() != static_cast<std::size_t>(r)) {
        throw std::logic_error("column algorithm produced " + std::to_string(c.labels.size()) + " labels");
    }
    order_fork(c);
    return c;
}

GradingElement grading_from_characteristic(const AlgebraSpec& spec, const std::vector<int>& labels) {
    const auto [type, r] = root_system(spec);
    if (labels.size() != static_cast<std::size_t>(r)) {
        throw std::invalid_argument("expected " + std::to_string(r) + " labels for " + spec.name());
    }
    GradingElement h{spec, Vector(static_cast<std::size_t>(spec.size))};
    if (spec.is_type_a()) {
        Vector d(static_cast<std::size_t>(spec.size));
        for (int i = spec.size - 2; i >= 0; --i) d[i] = d[i + 1] + Rational(labels[i]);
        h.diagonal = d;
        return h.traceless();
    }
    const int n = spec.half();
    Vector d(static_cast<std::size_t>(n));
    switch (type) {
        case 'C': d[n - 1] = Rational(labels[n - 1], 2); break;
        case 'B': d[n - 1] = Rational(labels[n - 1]); break;
        default:
            d[n - 1] = Rational(labels[n - 1] - labels[n - 2], 2);
            if (n >= 2) d[n - 2] = Rational(labels[n - 1] + labels[n - 2], 2);
    }
    const int start = type == 'D' ? n - 3 : n - 2;
    for (int i = start; i >= 0; --i) d[i] = d[i + 1] + Rational(labels[i]);
    for (int i = 1; i <= n; ++i) {
        h.diagonal[spec.index_of(i)] = d[i - 1];
        h.diagonal[spec.index_of(-i)] = -d[i - 1];
    }
    h.validate();
    return h;
}

// ----------------------------------------------------- further properties

bool check_duality_form(const AlgebraBasis& g, const GradingElement& h, const Matrix& e) {
    if (!is_good(g, h, e).verified) throw std::invalid_argument("pair is not good");
    std::vector<std::size_t> minus_one;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        if (basis_degree(g, h, k) == Rational(-1)) minus_one.push_back(k);
    }
    const std::size_t m = minus_one.size();
    Matrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            gram(i, j) = (e * bracket(g[minus_one[i]], g[minus_one[j]])).trace();
        }
    }
    return rank(gram) == m;
}

bool check_torus_weights(const AlgebraBasis& g, const GradingElement& h, const Matrix& e) {
    const AlgebraSpec& spec = g.spec();
    if (!spec.is_type_a()) throw std::invalid_argument("torus weight check supports gl/sl only");
    if (!is_good(g, h, e).verified) throw std::invalid_argument("pair is not good");
    const auto n = static_cast<std::size_t>(spec.size);
    // diagonal D commutes with e iff d_a = d_b whenever e_ab != 0
    std::vector<Vector> equations;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || e(a, b).is_zero()) continue;
            Vector row(n);
            row[a] = 1;
            row[b] = -1;
            equations.push_back(std::move(row));
        }
    }
    if (spec.family == Family::SL) equations.emplace_back(n, Rational(1));
    Matrix system(equations.size(), n);
    for (std::size_t r = 0; r < equations.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) system(r, c) = equations[r][c];
    const Subspace torus = equations.empty() ? Subspace::full(n) : kernel(system);
    for (std::size_t k = 0; k < g.dim(); ++k) {
        if (basis_degree(g, h, k) != Rational(1)) continue;
        const auto [a, b] = g.weights()[k];
        bool moved = false;
        for (const auto& t : torus.basis()) moved = moved || t[a] != t[b];
        if (!moved) return false;
    }
    return true;
}

}  // namespace goodgrad

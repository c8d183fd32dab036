#include "goodgrad/pyramid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace goodgrad {

int Pyramid::size() const {
    int s = 0;
    for (const auto& r : rows) s += r.boxes;
    return s;
}

std::vector<Box> Pyramid::boxes() const {
    std::vector<Box> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        for (int k = 0; k < r.boxes; ++k) {
            out.push_back(Box{r.first + Rational(2 * k), r.base_first + Rational(2 * k), r.y, i, k});
        }
    }
    return out;
}

bool Pyramid::is_centrally_symmetric() const {
    std::multiset<std::pair<Rational, int>> pts;
    for (const auto& b : boxes()) pts.emplace(b.x, b.y);
    for (const auto& [x, y] : pts) {
        if (pts.count({-x, -y}) != pts.count({x, y})) return false;
    }
    return true;
}

void Pyramid::check_invariants() const {
    for (const auto& r : rows) {
        if (r.boxes <= 0) throw std::logic_error("pyramid row without boxes");
        if (r.first.den() > 2) throw std::logic_error("pyramid coordinate with denominator > 2");
    }
    if (flavor == Flavor::TypeA) {
        if (rows.empty()) return;
        if (rows[0].first != -rows[0].last()) throw std::logic_error("lowest row not centred");
        for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
            if (rows[j].y != static_cast<int>(j) + 1) throw std::logic_error("row heights out of order");
            if (rows[j].first > rows[j + 1].first || rows[j].last() < rows[j + 1].last()) {
                throw std::logic_error("pyramid rows violate nesting");
            }
        }
        return;
    }
    if (!is_centrally_symmetric()) throw std::logic_error("pyramid not centrally symmetric");
}

// ---------------------------------------------------------------- type A

Pyramid symmetric_pyramid(const Partition& p) {
    Pyramid out;
    out.flavor = Flavor::TypeA;
    for (std::size_t j = 0; j < p.length(); ++j) {
        const Rational f(-p[j] + 1);
        out.rows.push_back(PyramidRow{static_cast<int>(j) + 1, f, f, p[j], p[j], RowKind::Full});
    }
    out.shifts.assign(p.length() > 0 ? p.length() - 1 : 0, Rational(0));
    return out;
}

std::vector<Pyramid> enumerate_pyramids(const Partition& p) {
    const Pyramid base = symmetric_pyramid(p);
    std::vector<Pyramid> out;
    const std::size_t k = p.length();
    std::vector<int> s(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k) {
            Pyramid q = base;
            for (std::size_t r = 1; r < k; ++r) {
                q.rows[r].first += Rational(s[r]);
                q.shifts[r - 1] = s[r];
            }
            out.push_back(std::move(q));
            return;
        }
        const int slack = p[j - 1] - p[j];
        for (int d = -slack; d <= slack; ++d) {
            s[j] = s[j - 1] + d;
            rec(j + 1);
        }
    };
    if (k == 0) return {base};
    rec(1);
    return out;
}

long pyramid_count(const Partition& p) {
    long c = 1;
    for (std::size_t i = 0; i + 1 < p.length(); ++i) c *= 2L * (p[i] - p[i + 1]) + 1;
    return c;
}

PowerSeries pyr_count_series(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    PowerSeries s(max_n);
    for (int n = 1; n <= max_n; ++n) {
        long total = 0;
        for (const auto& p : partitions_of(n)) total += static_cast<long>(enumerate_pyramids(p).size());
        s[n] = total;
    }
    return s;
}

bool is_unimodal(const std::vector<int>& u) {
    if (u.empty()) return false;
    std::size_t i = 0;
    while (i + 1 < u.size() && u[i] <= u[i + 1]) ++i;
    while (i + 1 < u.size() && u[i] >= u[i + 1]) ++i;
    return i + 1 == u.size() && std::all_of(u.begin(), u.end(), [](int x) { return x > 0; });
}

std::vector<std::vector<int>> unimodal_compositions(int n) {
    std::vector<std::vector<int>> out;
    for (auto& c : compositions_of(n)) {
        if (is_unimodal(c)) out.push_back(std::move(c));
    }
    return out;
}

Pyramid unimodal_to_pyramid(const std::vector<int>& u) {
    if (!is_unimodal(u)) throw std::invalid_argument("composition is not unimodal");
    const int k = static_cast<int>(u.size());
    const int height = *std::max_element(u.begin(), u.end());
    Pyramid out;
    out.flavor = Flavor::TypeA;
    for (int j = 1; j <= height; ++j) {
        int a = 0;
        while (u[a] < j) ++a;
        int b = a;
        while (b + 1 < k && u[b + 1] >= j) ++b;
        const Rational first(-k + 1 + 2 * a);
        const int len = b - a + 1;
        out.rows.push_back(PyramidRow{j, first, Rational(-len + 1), len, len, RowKind::Full});
    }
    for (std::size_t r = 1; r < out.rows.size(); ++r) {
        out.shifts.push_back(out.rows[r].first - out.rows[r].base_first);
    }
    return out;
}

std::vector<int> pyramid_to_unimodal(const Pyramid& p) {
    if (p.flavor != Flavor::TypeA || p.rows.empty()) {
        throw std::invalid_argument("expected a non-empty type A pyramid");
    }
    const Rational left = p.rows[0].first;
    std::map<Rational, int> heights;
    for (const auto& b : p.boxes()) {
        const Rational offset = (b.x - left) / Rational(2);
        if (!offset.is_integer()) throw std::invalid_argument("pyramid columns are not aligned");
        heights[b.x] += 1;
    }
    std::vector<int> u;
    for (const auto& [x, h] : heights) u.push_back(h);
    return u;
}

// ------------------------------------------------- symplectic / orthogonal

namespace {

void add_mirrored(Pyramid& out, int y, int first, int boxes, int part, RowKind upper, RowKind lower) {
    const int last = first + 2 * (boxes - 1);
    out.rows.push_back(PyramidRow{y, Rational(first), Rational(first), boxes, part, upper});
    out.rows.push_back(PyramidRow{-y, Rational(-last), Rational(-last), boxes, part, lower});
}

void add_full_rows(Pyramid& out, int& y, int part, int count) {
    for (int i = 0; i < count; ++i) {
        add_mirrored(out, ++y, -part + 1, part, part, RowKind::Full, RowKind::Full);
    }
}

void sort_rows(Pyramid& p) {
    std::stable_sort(p.rows.begin(), p.rows.end(),
                     [](const PyramidRow& a, const PyramidRow& b) { return a.y > b.y; });
}

std::map<int, int, std::greater<>> multiplicities(const Partition& p) {
    std::map<int, int, std::greater<>> m;
    for (int x : p.parts()) m[x] += 1;
    return m;
}

// Rows for the parts in `mult` (even total), pairing unequal parts of odd
// multiplicity greedily from the top. An unpartnered part is routed through
// the centre box, which must already exist.
void orthogonal_rows(Pyramid& out, std::map<int, int, std::greater<>> mult, int& y) {
    for (auto it = mult.begin(); it != mult.end(); ++it) {
        const int a = it->first;
        int& m = it->second;
        add_full_rows(out, y, a, m / 2);
        if (m % 2 == 0) continue;
        auto partner = std::next(it);
        while (partner != mult.end() && partner->second % 2 == 0) ++partner;
        if (partner != mult.end()) {
            const int b = partner->first;
            partner->second -= 1;
            ++y;
            // upper row -b+1..a-1, lower row -a+1..b-1
            out.rows.push_back(PyramidRow{y, Rational(-b + 1), Rational(-b + 1), (a + b) / 2, a,
                                          RowKind::PairedUpper});
            out.rows.push_back(PyramidRow{-y, Rational(-a + 1), Rational(-a + 1), (a + b) / 2, b,
                                          RowKind::PairedLower});
        } else if (a > 1) {
            ++y;
            add_mirrored(out, y, 2, (a - 1) / 2, a, RowKind::CenterFed, RowKind::CenterFeed);
        }
    }
}

}  // namespace

Pyramid symplectic_base_pyramid(const Partition& p) {
    if (!is_symplectic(p)) throw std::invalid_argument("partition " + p.to_string() + " is not symplectic");
    Pyramid out;
    out.flavor = Flavor::Symplectic;
    const auto mult = multiplicities(p);
    int y = 0;
    bool first = true;
    for (const auto& [a, m] : mult) {
        if (first && m % 2 == 1) {
            out.rows.push_back(PyramidRow{0, Rational(-a + 1), Rational(-a + 1), a, a, RowKind::Full});
            add_full_rows(out, y, a, m / 2);
        } else if (m % 2 == 1) {
            ++y;
            add_mirrored(out, y, 1, a / 2, a, RowKind::HalfUpper, RowKind::HalfLower);
            add_full_rows(out, y, a, m / 2);
        } else {
            add_full_rows(out, y, a, m / 2);
        }
        first = false;
    }
    sort_rows(out);
    return out;
}

Pyramid orthogonal_base_pyramid(const Partition& p) {
    if (!is_orthogonal(p)) throw std::invalid_argument("partition " + p.to_string() + " is not orthogonal");
    Pyramid out;
    out.flavor = Flavor::Orthogonal;
    auto mult = multiplicities(p);
    int y = 0;
    if (p.total() % 2 == 1) {
        const int p1 = mult.begin()->first;
        if (mult.begin()->second % 2 == 1) {
            out.rows.push_back(PyramidRow{0, Rational(-p1 + 1), Rational(-p1 + 1), p1, p1, RowKind::Full});
            if (--mult.begin()->second == 0) mult.erase(mult.begin());
        } else {
            // the smallest part of odd multiplicity ends up routed through v_0
            int smallest = 0;
            for (const auto& [a, m] : mult) {
                if (m % 2 == 1) smallest = a;
            }
            out.rows.push_back(PyramidRow{0, Rational(0), Rational(0), 1, smallest, RowKind::Center});
        }
    }
    orthogonal_rows(out, mult, y);
    sort_rows(out);
    return out;
}

Pyramid shift_center_parts(const Pyramid& base, const std::vector<int>& centre,
                           const std::vector<Rational>& t) {
    if (centre.size() != t.size()) throw std::invalid_argument("one shift per centre part required");
    Pyramid out = base;
    for (std::size_t i = 0; i < centre.size(); ++i) {
        for (auto& r : out.rows) {
            if (r.part != centre[i] || r.kind != RowKind::Full || r.y == 0) continue;
            r.first = r.base_first + (r.y > 0 ? t[i] : -t[i]);
        }
    }
    out.shifts = t;
    return out;
}

namespace {

std::vector<std::vector<Rational>> binary_vectors(std::size_t c) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        std::vector<Rational> t(c);
        // first coordinate is the most significant bit: lexicographic order
        for (std::size_t i = 0; i < c; ++i) t[i] = (mask >> (c - 1 - i)) & 1U ? 1 : 0;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Pyramid> shifted_family(const Pyramid& base, const std::vector<int>& centre,
                                    const std::vector<std::vector<Rational>>& ts) {
    std::vector<Pyramid> out;
    for (const auto& t : ts) out.push_back(shift_center_parts(base, centre, t));
    return out;
}

bool all_parts_in(const Partition& p, const std::vector<int>& centre) {
    for (int x : p.distinct_parts()) {
        if (std::find(centre.begin(), centre.end(), x) == centre.end()) return false;
    }
    return true;
}

}  // namespace

std::vector<Pyramid> symplectic_pyramids(const Partition& p) {
    const AlgebraSpec spec = AlgebraSpec::sp(p.total());
    const Pyramid base = symplectic_base_pyramid(p);
    const auto centre = center_parts(spec, p);
    if (centre.empty()) return {base};
    auto ts = binary_vectors(centre.size());
    if (all_parts_in(p, centre)) ts.emplace_back(centre.size(), Rational(1, 2));
    return shifted_family(base, centre, ts);
}

std::vector<Pyramid> orthogonal_pyramids(const Partition& p) {
    const AlgebraSpec spec = AlgebraSpec::so(p.total());
    const Pyramid base = orthogonal_base_pyramid(p);
    const auto centre = center_parts(spec, p);
    if (centre.empty()) return {base};
    const std::size_t c = centre.size();
    const bool all_in = all_parts_in(p, centre);
    if (centre.back() != 1) {
        auto ts = binary_vectors(c);
        if (all_in && p.total() % 2 == 0) ts.emplace_back(c, Rational(1, 2));
        return shifted_family(base, centre, ts);
    }
    int q = 0;
    for (int x : p.distinct_parts()) {
        if (x > 1) q = x;
    }
    std::vector<std::vector<Rational>> ts;
    if (c < 2 || centre[c - 2] != q) {
        for (const auto& head : binary_vectors(c - 1)) {
            for (int tc = 0; tc <= q - 1; ++tc) {
                auto t = head;
                t.emplace_back(tc);
                ts.push_back(std::move(t));
            }
        }
    } else {
        for (const auto& head : binary_vectors(c - 2)) {
            for (int last_pair = 0; last_pair <= 1; ++last_pair) {
                for (int tc = 0; tc <= q - 1 - last_pair; ++tc) {
                    auto t = head;
                    t.emplace_back(last_pair);
                    t.emplace_back(tc);
                    ts.push_back(std::move(t));
                }
            }
        }
    }
    if (all_in && p.total() % 2 == 0) {
        for (Rational tc(1, 2); tc <= Rational(q) - Rational(3, 2); tc += 1) {
            std::vector<Rational> t(c, Rational(1, 2));
            t.back() = tc;
            ts.push_back(std::move(t));
        }
    }
    return shifted_family(base, centre, ts);
}

std::string render_pyramid(const Pyramid& p) {
    const auto boxes = p.boxes();
    if (boxes.empty()) return "";
    Rational xmin = boxes.front().x;
    for (const auto& b : boxes) xmin = std::min(xmin, b.x);
    std::map<int, std::string, std::greater<>> lines;
    for (const auto& b : boxes) {
        const auto col = static_cast<std::size_t>((Rational(2) * (b.x - xmin)).to_long());
        std::string& line = lines[b.y];
        if (line.size() < col + 4) line.resize(col + 4, ' ');
        line.replace(col, 4, "[  ]");
    }
    std::string out;
    for (const auto& [y, line] : lines) out += line + "\n";
    return out;
}

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::TypeA: return "type_a";
        case Flavor::Symplectic: return "symplectic";
        case Flavor::Orthogonal: return "orthogonal";
    }
    return "?";
}

}  // namespace goodgrad

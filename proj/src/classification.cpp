#include "goodgrad/classification.hpp"

#include "goodgrad/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace goodgrad {

namespace {

Pyramid base_pyramid(const AlgebraSpec& spec, const Partition& p) {
    check_partition_for(spec, p);
    switch (spec.family) {
        case Family::GL:
        case Family::SL: return symmetric_pyramid(p);
        case Family::SP: return symplectic_base_pyramid(p);
        case Family::SO: return orthogonal_base_pyramid(p);
    }
    throw std::logic_error("unknown family");
}

bool diagonal_less(const GradingElement& a, const GradingElement& b) { return a.diagonal < b.diagonal; }

std::vector<GradingElement> sorted_unique(std::vector<GradingElement> v) {
    std::sort(v.begin(), v.end(), diagonal_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

GradingEntry make_entry(const AlgebraBasis& g, const GoodnessChecker& checker, GradingElement h,
                        std::vector<Rational> params, bool dynkin, std::optional<Pyramid> pyramid) {
    if (!checker.is_good_grading(h)) {
        throw VerificationError("constructed grading failed the goodness check");
    }
    GradingEntry entry;
    entry.characteristic = characteristic_of(g, h);
    for (int label : entry.characteristic.labels) {
        if (label < 0 || label > 2) throw VerificationError("good grading with label outside {0,1,2}");
    }
    entry.is_even = is_even_grading(g, h);
    entry.h = std::move(h);
    entry.params = std::move(params);
    entry.is_dynkin = dynkin;
    entry.pyramid = std::move(pyramid);
    return entry;
}

bool all_zero(const std::vector<Rational>& t) {
    return std::all_of(t.begin(), t.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<std::vector<Rational>> cartesian(const std::vector<std::vector<Rational>>& axes) {
    std::vector<std::vector<Rational>> out{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<Rational>> next;
        for (const auto& prefix : out) {
            for (const auto& v : axis) {
                auto t = prefix;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Rational> range(const Rational& lo, const Rational& hi, const Rational& step) {
    std::vector<Rational> out;
    for (Rational x = lo; x <= hi; x += step) out.push_back(x);
    return out;
}

}  // namespace

std::size_t GoodGradingFamily::dynkin_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const GradingEntry& e) { return e.is_dynkin; }));
}

std::vector<GradingElement> GoodGradingFamily::gradings() const {
    std::vector<GradingElement> out;
    for (const auto& e : entries) out.push_back(e.h);
    return sorted_unique(out);
}

GradingElement dynkin_grading(const AlgebraSpec& spec, const Partition& p) {
    return grading_of_pyramid(spec, base_pyramid(spec, p)).traceless();
}

Matrix nilpotent_of_partition(const AlgebraSpec& spec, const Partition& p) {
    return nilpotent_of_pyramid(spec, base_pyramid(spec, p));
}

GradingElement center_element(const AlgebraSpec& spec, const Partition& p, const std::vector<Rational>& t) {
    const Pyramid base = base_pyramid(spec, p);
    const auto centre = center_parts(spec, p);
    if (t.size() != centre.size()) {
        throw std::invalid_argument("expected " + std::to_string(centre.size()) + " centre parameters");
    }
    const auto labels = box_labels(spec, base);
    const auto boxes = base.boxes();
    GradingElement z{spec, Vector(static_cast<std::size_t>(spec.size))};
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& row = base.rows[boxes[i].row];
        const auto it = std::find(centre.begin(), centre.end(), row.part);
        if (it == centre.end()) continue;
        const Rational& ti = t[static_cast<std::size_t>(it - centre.begin())];
        if (spec.is_type_a()) {
            z.diagonal[spec.index_of(labels[i])] = ti;
        } else if (row.y > 0) {
            z.diagonal[spec.index_of(labels[i])] = ti;
            z.diagonal[spec.index_of(-labels[i])] = -ti;
        }
    }
    if (spec.family == Family::SL) z = z.traceless();
    return z;
}

GradingElement shifted_grading(const AlgebraSpec& spec, const Partition& p, const std::vector<Rational>& t) {
    GradingElement h = dynkin_grading(spec, p);
    const GradingElement z = center_element(spec, p, t);
    for (std::size_t i = 0; i < h.diagonal.size(); ++i) h.diagonal[i] += z.diagonal[i];
    if (spec.is_type_a()) h = h.traceless();
    return h;
}

std::vector<Rational> sign_canonical(std::vector<Rational> t) {
    for (auto& x : t) x = abs(x);
    return t;
}

std::vector<std::vector<Rational>> theorem_parameters(const AlgebraSpec& spec, const Partition& p) {
    if (spec.is_type_a()) throw std::invalid_argument("theorem parameters are defined for SP/SO");
    const auto centre = center_parts(spec, p);
    const std::size_t c = centre.size();
    const std::vector<Rational> unit{-1, 0, 1};
    const std::vector<Rational> halves{Rational(-1, 2), Rational(1, 2)};
    bool all_in = true;
    for (int x : p.distinct_parts()) {
        all_in = all_in && std::find(centre.begin(), centre.end(), x) != centre.end();
    }
    std::vector<std::vector<Rational>> raw;
    auto add_all = [&](const std::vector<std::vector<Rational>>& v) { raw.insert(raw.end(), v.begin(), v.end()); };
    if (spec.family == Family::SP) {
        add_all(cartesian(std::vector<std::vector<Rational>>(c, unit)));
        if (all_in && c > 0) add_all(cartesian(std::vector<std::vector<Rational>>(c, halves)));
    } else if (c == 0 || centre.back() != 1) {
        add_all(cartesian(std::vector<std::vector<Rational>>(c, unit)));
        if (all_in && spec.size % 2 == 0) add_all(cartesian(std::vector<std::vector<Rational>>(c, halves)));
    } else {
        int q = 0;  // smallest part greater than 1
        for (int x : p.distinct_parts()) {
            if (x > 1) q = x;
        }
        const bool paired = c >= 2 && centre[c - 2] == q;
        const Rational reach(q - 1);
        auto family = [&](const std::vector<Rational>& head_axis, const Rational& offset) {
            for (const auto& head : cartesian(std::vector<std::vector<Rational>>(c - 1, head_axis))) {
                for (Rational tc = offset - Rational(q); tc <= Rational(q); tc += Rational(1)) {
                    const bool ok = paired ? abs(head[c - 2] - tc) <= reach && abs(head[c - 2] + tc) <= reach
                                           : abs(tc) <= reach;
                    if (!ok) continue;
                    auto t = head;
                    t.push_back(tc);
                    raw.push_back(std::move(t));
                }
            }
        };
        family(unit, Rational(0));
        if (all_in && spec.size % 2 == 0) family(halves, Rational(1, 2));
    }
    std::set<std::vector<Rational>> canonical;
    for (auto& t : raw) canonical.insert(sign_canonical(std::move(t)));
    return {canonical.begin(), canonical.end()};
}

int orthogonal_case(const Partition& p) {
    const AlgebraSpec spec = AlgebraSpec::so(p.total());
    const auto centre = center_parts(spec, p);
    if (centre.empty()) return 0;
    bool all_in = true;
    int q = 0;
    for (int x : p.distinct_parts()) {
        all_in = all_in && std::find(centre.begin(), centre.end(), x) != centre.end();
        if (x > 1) q = x;
    }
    const bool has_one = centre.back() == 1;
    if (all_in && spec.size % 2 == 0) return has_one ? 5 : 4;
    if (!has_one) return 1;
    return centre.size() >= 2 && centre[centre.size() - 2] == q ? 2 : 3;
}

// ------------------------------------------------------------- families

GoodGradingFamily good_gradings_gl(const AlgebraSpec& spec, const Partition& p) {
    if (!spec.is_type_a()) throw std::invalid_argument("good_gradings_gl needs gl_n or sl_n");
    check_partition_for(spec, p);
    const AlgebraBasis g(spec);
    GoodGradingFamily fam{spec, p, nilpotent_of_partition(spec, p), {}};
    const GradingElement dynkin = dynkin_grading(spec, p);
    if (fam.e.is_zero()) {
        // zero orbit: no good element exists
        return fam;
    }
    const GoodnessChecker checker(g, fam.e);
    for (const auto& pyr : enumerate_pyramids(p)) {
        GradingElement h = grading_of_pyramid(spec, pyr).traceless();
        const bool dynkin_entry = h == dynkin;
        fam.entries.push_back(make_entry(g, checker, std::move(h), pyr.shifts, dynkin_entry, pyr));
    }
    if (fam.gradings() != sorted_unique(gl_block_system_gradings(spec, p))) {
        throw VerificationError("pyramid gradings and block-difference solutions differ");
    }
    if (fam.dynkin_count() != 1) throw VerificationError("expected exactly one Dynkin grading");
    return fam;
}

namespace {

GoodGradingFamily classical_family(const AlgebraSpec& spec, const Partition& p) {
    check_partition_for(spec, p);
    const AlgebraBasis g(spec);
    GoodGradingFamily fam{spec, p, nilpotent_of_partition(spec, p), {}};
    if (fam.e.is_zero()) return fam;
    const GoodnessChecker checker(g, fam.e);
    for (auto& t : theorem_parameters(spec, p)) {
        GradingElement h = shifted_grading(spec, p, t);
        const bool dynkin_entry = all_zero(t);
        fam.entries.push_back(make_entry(g, checker, std::move(h), std::move(t), dynkin_entry, std::nullopt));
    }
    // the pyramid construction must give the same set, one pyramid per grading
    const auto pyramids = spec.family == Family::SP ? symplectic_pyramids(p) : orthogonal_pyramids(p);
    std::vector<GradingElement> from_pyramids;
    for (const auto& pyr : pyramids) from_pyramids.push_back(grading_of_pyramid(spec, pyr));
    if (from_pyramids.size() != fam.entries.size() || sorted_unique(from_pyramids) != fam.gradings()) {
        throw VerificationError("theorem gradings and pyramid gradings differ for " + p.to_string());
    }
    for (auto& entry : fam.entries) {
        for (const auto& pyr : pyramids) {
            if (pyr.shifts == entry.params) entry.pyramid = pyr;
        }
        if (!entry.pyramid) throw VerificationError("no pyramid carries the parameters of a grading");
    }
    if (fam.dynkin_count() != 1) throw VerificationError("expected exactly one Dynkin grading");
    return fam;
}

}  // namespace

GoodGradingFamily good_gradings_sp(const Partition& p) {
    return classical_family(AlgebraSpec::sp(p.total()), p);
}

GoodGradingFamily good_gradings_so(const Partition& p) {
    return classical_family(AlgebraSpec::so(p.total()), p);
}

GoodGradingFamily classify(const AlgebraSpec& spec, const Partition& p) {
    switch (spec.family) {
        case Family::GL:
        case Family::SL: return good_gradings_gl(spec, p);
        case Family::SP: check_partition_for(spec, p); return good_gradings_sp(p);
        case Family::SO: check_partition_for(spec, p); return good_gradings_so(p);
    }
    throw std::logic_error("unknown family");
}

std::vector<GradingElement> gl_block_system_gradings(const AlgebraSpec& spec, const Partition& p) {
    check_partition_for(spec, p);
    const auto parts = p.distinct_parts();
    const std::size_t d = parts.size();
    std::vector<std::vector<Rational>> axes;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const int slack = parts[i] - parts[i + 1];
        axes.push_back(range(Rational(-slack), Rational(slack), Rational(1)));
    }
    std::vector<GradingElement> out;
    const GradingElement dynkin = dynkin_grading(spec, p);
    for (const auto& a : cartesian(axes)) {
        // block values b_i with b_i - b_{i+1} = a_i and sum m_i p_i b_i = 0
        std::vector<Rational> b(d);
        for (std::size_t i = 1; i < d; ++i) b[i] = b[i - 1] - a[i - 1];
        Rational weighted;
        for (std::size_t i = 0; i < d; ++i) weighted += Rational(static_cast<long>(p.multiplicity(parts[i]) * parts[i])) * b[i];
        const Rational shift = weighted / Rational(p.total());
        for (auto& x : b) x -= shift;
        GradingElement h = dynkin;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t len = p.multiplicity(parts[i]) * static_cast<std::size_t>(parts[i]);
            for (std::size_t k = 0; k < len; ++k) h.diagonal[pos++] += b[i];
        }
        out.push_back(std::move(h));
    }
    return out;
}

bool is_even_grading(const AlgebraBasis& g, const GradingElement& h) {
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational d = basis_degree(g, h, k);
        if (!d.is_integer() || d.num() % 2 != 0) return false;
    }
    return true;
}

GradingElement even_good_grading_gl(const AlgebraSpec& spec, const Partition& p) {
    if (!spec.is_type_a()) throw std::invalid_argument("even_good_grading_gl needs gl_n or sl_n");
    const auto parts = p.distinct_parts();
    std::vector<Rational> t(parts.size());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        t[i] = t[i - 1] - Rational((parts[i - 1] - parts[i]) % 2);
    }
    GradingElement h = shifted_grading(spec, p, t);
    const AlgebraBasis g(spec);
    if (!is_even_grading(g, h)) throw VerificationError("parity shift did not produce an even grading");
    return h;
}

std::vector<GradingElement> even_good_gradings_sp(const Partition& p) {
    const GoodGradingFamily fam = good_gradings_sp(p);
    std::vector<GradingElement> out;
    for (const auto& e : fam.entries) {
        if (e.is_even) out.push_back(e.h);
    }
    return out;
}

// ---------------------------------------------------------------- sweep

unsigned worker_count() {
    if (const char* env = std::getenv("GOODGRAD_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<GradingElement> sweep_oracle(const AlgebraSpec& spec, const Partition& p, const Rational& bound,
                                         const Rational& step) {
    check_partition_for(spec, p);
    if (step.sign() <= 0 || bound.sign() < 0) throw std::invalid_argument("sweep needs step > 0 and bound >= 0");
    const int c = center_dim(spec, p);
    if (c > 3) throw std::invalid_argument("sweep limited to centre dimension <= 3");
    const std::size_t params = spec.is_type_a() ? static_cast<std::size_t>(c) + 1 : static_cast<std::size_t>(c);
    const AlgebraBasis g(spec);
    const Matrix e = nilpotent_of_partition(spec, p);
    if (e.is_zero()) return {};
    const GoodnessChecker checker(g, e);
    const auto grid = cartesian(std::vector<std::vector<Rational>>(params, range(-bound, bound, step)));

    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(grid.size()));
    std::vector<std::vector<GradingElement>> found(workers);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < grid.size(); i += workers) {
            const auto& t = grid[i];
            GradingElement h = shifted_grading(spec, p, spec.is_type_a() ? t : sign_canonical(t));
            if (!spec.is_type_a()) {
                // the sign action must not change goodness
                const GradingElement raw = shifted_grading(spec, p, t);
                if (checker.is_good_grading(raw) != checker.is_good_grading(h)) {
                    throw VerificationError("goodness changed under t -> |t|");
                }
            }
            if (checker.is_good_grading(h)) found[w].push_back(std::move(h));
        }
    };
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                work(w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    std::vector<GradingElement> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    return sorted_unique(std::move(all));
}

// ------------------------------------------------------------ parabolics

void ParabolicSpec::validate() const {
    algebra.validate();
    if (composition.empty()) throw std::invalid_argument("composition must be non-empty");
    int sum = 0;
    for (int a : composition) {
        if (a <= 0) throw std::invalid_argument("composition entries must be positive");
        sum += a;
    }
    if (algebra.is_type_a()) {
        if (q != 0) throw std::invalid_argument("q must be 0 for type A");
        if (sum != algebra.size) throw std::invalid_argument("composition does not sum to " + std::to_string(algebra.size));
        return;
    }
    if (q < 0 || q > algebra.size || (algebra.size - q) % 2 != 0) {
        throw std::invalid_argument("q must satisfy 0 <= q <= N with N - q even");
    }
    if (2 * sum != algebra.size - q) throw std::invalid_argument("composition must sum to (N - q)/2");
    if (algebra.family == Family::SO && algebra.size % 2 == 0 && q == 2) {
        throw std::invalid_argument("q = 2 is excluded for so_2n");
    }
}

std::string ParabolicSpec::to_string() const {
    std::string s = algebra.name() + " (";
    for (std::size_t i = 0; i < composition.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(composition[i]);
    }
    return s + "; " + std::to_string(q) + ")";
}

std::vector<ParabolicSpec> all_parabolics(const AlgebraSpec& spec) {
    spec.validate();
    std::vector<ParabolicSpec> out;
    if (spec.is_type_a()) {
        for (auto& c : compositions_of(spec.size)) out.push_back(ParabolicSpec{spec, std::move(c), 0});
        return out;
    }
    for (int q = spec.size % 2; q < spec.size; q += 2) {
        if (spec.family == Family::SO && spec.size % 2 == 0 && q == 2) continue;
        for (auto& c : compositions_of((spec.size - q) / 2)) out.push_back(ParabolicSpec{spec, std::move(c), q});
    }
    return out;
}

GradingElement parabolic_grading(const ParabolicSpec& par) {
    par.validate();
    const AlgebraSpec& spec = par.algebra;
    const auto& a = par.composition;
    const int t = static_cast<int>(a.size());
    GradingElement h{spec, Vector(static_cast<std::size_t>(spec.size))};
    if (spec.is_type_a()) {
        std::size_t pos = 0;
        for (int i = 0; i < t; ++i) {
            for (int k = 0; k < a[i]; ++k) h.diagonal[pos++] = Rational(2 * (t - 1 - i));
        }
        return h.traceless();
    }
    // values on v_1..v_n block by block; the q-dimensional middle gets 0
    std::vector<Rational> value(static_cast<std::size_t>(t));
    const bool so_even_tail = spec.family == Family::SO && spec.size % 2 == 0 && par.q == 0 && a.back() == 1;
    for (int i = 0; i < t; ++i) {
        if (par.q > 0) {
            value[i] = Rational(2 * (t - i));
        } else if (so_even_tail) {
            // a last block of size 1 with q = 0 gives the same parabolic as q = 2
            value[i] = Rational(2 * (t - 1 - i));
        } else {
            value[i] = Rational(2 * (t - 1 - i) + 1);
        }
    }
    int label = 1;
    for (int i = 0; i < t; ++i) {
        for (int k = 0; k < a[i]; ++k, ++label) {
            h.diagonal[spec.index_of(label)] = value[i];
            h.diagonal[spec.index_of(-label)] = -value[i];
        }
    }
    h.validate();
    return h;
}

namespace {

bool nondecreasing(const std::vector<int>& a, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i + 1 < to; ++i) {
        if (a[i] > a[i + 1]) return false;
    }
    return true;
}

bool odd_multiplicities_at_most_one(const std::vector<int>& a) {
    for (int x : a) {
        if (x % 2 == 1 && std::count(a.begin(), a.end(), x) > 1) return false;
    }
    return true;
}

std::vector<int> repeat(int value, int times) { return std::vector<int>(static_cast<std::size_t>(std::max(times, 0)), value); }

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// (a_1..a_{t-2}, q^{m-s}, q+1, q^s; q) with a_1 <= .. <= a_{t-2} < q, m >= 1
bool interleaved_form(const std::vector<int>& a, int q) {
    const auto top = std::find(a.begin(), a.end(), q + 1);
    if (top == a.end() || std::count(a.begin(), a.end(), q + 1) != 1) return false;
    const std::vector<int> before(a.begin(), top);
    const std::vector<int> after(top + 1, a.end());
    if (!std::all_of(after.begin(), after.end(), [&](int x) { return x == q; })) return false;
    std::size_t k = before.size();
    while (k > 0 && before[k - 1] == q) --k;
    const std::size_t copies = before.size() - k + after.size();
    if (copies < 1) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (before[i] >= q) return false;
    }
    return nondecreasing(before, 0, k);
}

// a_1 <= .. <= a_{t-1} < q < a_t = q + 1
bool top_step_form(const std::vector<int>& a, int q) {
    if (a.back() != q + 1) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] >= q) return false;
    }
    return nondecreasing(a, 0, a.size() - 1);
}

std::set<std::vector<int>> sporadic_so_forms(int n) {
    std::set<std::vector<int>> out;
    if (n % 2 == 1) {
        const int s = (n - 1) / 2;
        for (int i = 0; i <= s; ++i) out.insert(concat({repeat(1, 2 * (s - i)), repeat(2, i), {1}}));
        for (int i = 2; i <= s; ++i) {
            for (int l = 2; l <= i; ++l) {
                out.insert(concat({repeat(1, 2 * (s - i) + 1), repeat(2, i - l), {3}, repeat(2, l - 2), {1}}));
            }
        }
        for (int i = 1; i <= s - 1; ++i) out.insert(concat({repeat(2, s - (i + 1)), {3}, repeat(2, i)}));
    } else if (n >= 2) {
        const int s = (n - 2) / 2;
        for (int i = 0; i <= s; ++i) out.insert(concat({repeat(1, 2 * (s - i) + 1), repeat(2, i), {1}}));
        for (int i = 1; i <= s; ++i) {
            for (int l = 1; l <= i; ++l) {
                out.insert(concat({repeat(1, 2 * (s - i)), repeat(2, i - l), {3}, repeat(2, l - 1), {1}}));
            }
        }
        for (int i = 1; i <= s - 1; ++i) out.insert(concat({{1}, repeat(2, i - 1), {3}, repeat(2, s - i)}));
    }
    return out;
}

}  // namespace

RichardsonVerdict richardson_is_good(const ParabolicSpec& par) {
    par.validate();
    const auto& a = par.composition;
    const int q = par.q;
    const AlgebraSpec& spec = par.algebra;
    const bool sorted = nondecreasing(a, 0, a.size());
    if (spec.is_type_a()) {
        if (is_unimodal(a)) return {true, "composition is unimodal"};
        return {false, "composition is not unimodal"};
    }
    if (spec.family == Family::SP) {
        if (!sorted) return {false, "composition is not nondecreasing"};
        if (q > 0 && a.back() > q) return {false, "last entry exceeds q"};
        if (q > 0 && !odd_multiplicities_at_most_one(a)) return {false, "an odd entry repeats"};
        return {true, "nondecreasing composition within the symplectic bounds"};
    }
    if (spec.size % 2 == 1) {
        if (sorted && a.back() <= q) return {true, "nondecreasing with a_t <= q"};
        if (interleaved_form(a, q)) return {true, "interleaved form around q+1"};
        if (top_step_form(a, q)) return {true, "entries below q followed by q+1"};
        return {false, "none of the odd orthogonal forms applies"};
    }
    const int n = spec.half();
    if (q == 0) {
        if (sporadic_so_forms(n).count(a)) return {true, "sporadic small-part form"};
        if (sorted && odd_multiplicities_at_most_one(a)) return {true, "nondecreasing, odd entries distinct"};
        const std::size_t t = a.size();
        if (t >= 2 && nondecreasing(a, 0, t - 1) && a[t - 2] % 2 == 1 && a[t - 2] >= 5 && a[t - 1] == a[t - 2] - 1 &&
            odd_multiplicities_at_most_one(a)) {
            return {true, "last entry one below an odd entry >= 5"};
        }
        return {false, "none of the even orthogonal forms with q = 0 applies"};
    }
    if (sorted && a.back() <= q) return {true, "nondecreasing with a_t <= q"};
    if (interleaved_form(a, q)) return {true, "interleaved form around q+1"};
    if (top_step_form(a, q)) return {true, "entries below q followed by q+1"};
    return {false, "none of the even orthogonal forms with q > 0 applies"};
}

bool has_good_generic_element(const AlgebraBasis& g, const GradingElement& h, int samples, std::uint32_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (!is_even_grading(g, h)) throw std::invalid_argument("grading is not even");
    std::vector<std::size_t> degree_two;
    std::size_t dim0 = 0;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational d = basis_degree(g, h, k);
        if (d == Rational(2)) degree_two.push_back(k);
        if (d.is_zero()) ++dim0;
    }
    if (degree_two.empty()) throw std::invalid_argument("grading has g_2 = 0");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::size_t best = g.dim();
    for (int s = 0; s < samples && best > dim0; ++s) {
        Vector coords(g.dim());
        for (auto k : degree_two) coords[k] = coeff(rng);
        const Matrix e = g.combine(coords);
        if (e.is_zero()) continue;
        best = std::min(best, GoodnessChecker(g, e).centralizer_dim());
    }
    if (best < dim0) throw VerificationError("element of g_2 with centralizer smaller than g_0");
    return best == dim0;
}

bool generic_richardson_oracle(const ParabolicSpec& par, int samples, std::uint32_t seed) {
    const GradingElement h = parabolic_grading(par);
    return has_good_generic_element(AlgebraBasis(par.algebra), h, samples, seed);
}

ParabolicSpec parabolic_of_even_grading(const GradingElement& h) {
    h.validate();
    const AlgebraSpec& spec = h.spec;
    if (!is_even_grading(AlgebraBasis(spec), h)) throw std::invalid_argument("grading is not even");
    ParabolicSpec par{spec, {}, 0};
    std::vector<Rational> values;
    if (spec.is_type_a()) {
        values = h.diagonal;
    } else {
        for (int i = 1; i <= spec.half(); ++i) values.push_back(abs(h.diagonal[spec.index_of(i)]));
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    int zeros = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!spec.is_type_a() && values[i].is_zero()) {
            ++zeros;
            continue;
        }
        if (i == 0 || values[i] != values[i - 1]) par.composition.push_back(0);
        ++par.composition.back();
    }
    if (!spec.is_type_a()) {
        par.q = 2 * zeros + spec.size % 2;
        if (spec.family == Family::SO && spec.size % 2 == 0 && par.q == 2) {
            // a single zero pair is the q = 0 parabolic ending in a block of size 1
            par.q = 0;
            par.composition.push_back(1);
        }
    }
    par.validate();
    return par;
}

std::vector<GradingElement> single_node_even_gradings(const AlgebraSpec& spec) {
    const int r = root_system(spec).second;
    std::vector<GradingElement> out;
    for (int j = 0; j < r; ++j) {
        std::vector<int> labels(static_cast<std::size_t>(r), 2);
        labels[j] = 0;
        out.push_back(grading_from_characteristic(spec, labels));
    }
    return out;
}

}  // namespace goodgrad

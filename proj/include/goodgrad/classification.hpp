#pragma once

#include "goodgrad/grading.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goodgrad {

struct GradingEntry {
    GradingElement h;
    /// Shifts of the row blocks (type A) or t_1..t_c (SP/SO), sign-canonical.
    std::vector<Rational> params;
    Characteristic characteristic;
    bool is_dynkin = false;
    bool is_even = false;
    std::optional<Pyramid> pyramid;
};

/// All good gradings for the nilpotent e(p), each verified on construction.
struct GoodGradingFamily {
    AlgebraSpec spec;
    Partition partition;
    Matrix e;
    std::vector<GradingEntry> entries;

    std::size_t dynkin_count() const;
    std::vector<GradingElement> gradings() const;
};

/// The Dynkin element h(p) of the base pyramid (traceless for GL/SL).
GradingElement dynkin_grading(const AlgebraSpec& spec, const Partition& p);
/// e(p) from the base pyramid of the family.
Matrix nilpotent_of_partition(const AlgebraSpec& spec, const Partition& p);
/// Centre element: t_i on the upper boxes of the rows of centre part i,
/// -t_i on their mirrors. For GL/SL, t_i multiplies the identity on the
/// rows of the i-th distinct part (all distinct parts, so t has c+1 entries).
GradingElement center_element(const AlgebraSpec& spec, const Partition& p, const std::vector<Rational>& t);
/// h(p) + z(t), traceless for GL/SL.
GradingElement shifted_grading(const AlgebraSpec& spec, const Partition& p, const std::vector<Rational>& t);

/// Replaces every t_i by |t_i| (gradings agree iff the t_i differ by signs).
std::vector<Rational> sign_canonical(std::vector<Rational> t);
/// t-vectors allowed by the classification theorem for SP/SO, sign-canonical, sorted.
std::vector<std::vector<Rational>> theorem_parameters(const AlgebraSpec& spec, const Partition& p);

/// Case of the orthogonal classification that applies to p: 0 when c(p) = 0,
/// otherwise 1..5 in the order (i)..(v) of the even-N statement (odd N only
/// reaches 1..3).
int orthogonal_case(const Partition& p);

GoodGradingFamily good_gradings_gl(const AlgebraSpec& spec, const Partition& p);
GoodGradingFamily good_gradings_sp(const Partition& p);
GoodGradingFamily good_gradings_so(const Partition& p);
/// Dispatches on the family.
GoodGradingFamily classify(const AlgebraSpec& spec, const Partition& p);

/// Solutions of the block-difference system |a_i| <= p_i - p_{i+1}, traceless.
std::vector<GradingElement> gl_block_system_gradings(const AlgebraSpec& spec, const Partition& p);
/// Even good grading obtained by shifting rows left at every parity break.
GradingElement even_good_grading_gl(const AlgebraSpec& spec, const Partition& p);
std::vector<GradingElement> even_good_gradings_sp(const Partition& p);
bool is_even_grading(const AlgebraBasis& g, const GradingElement& h);

/// Exhaustive search over H = h(p) + z(t), t on the grid
/// {-bound, -bound+step, ..., bound}^k, deduplicated (traceless for GL/SL,
/// sign-canonical for SP/SO). Sorted by diagonal. Throws when c(p) > 3.
std::vector<GradingElement> sweep_oracle(const AlgebraSpec& spec, const Partition& p,
                                         const Rational& bound, const Rational& step);

// ---- parabolics ----

struct ParabolicSpec {
    AlgebraSpec algebra;
    std::vector<int> composition;
    int q = 0;

    /// Throws std::invalid_argument for inconsistent data.
    void validate() const;
    std::string to_string() const;
};

/// All valid parabolic data for the algebra (non-empty compositions).
std::vector<ParabolicSpec> all_parabolics(const AlgebraSpec& spec);
/// Even grading whose non-negative part is the parabolic.
GradingElement parabolic_grading(const ParabolicSpec& par);

struct RichardsonVerdict {
    bool good = false;
    std::string reason;
};
/// Closed-form criterion for goodness of the Richardson element.
RichardsonVerdict richardson_is_good(const ParabolicSpec& par);
/// Samples random integral e in g_2 (entries in -3..3); true iff the
/// smallest dim g^e seen equals dim g_0. Throws when g_2 = 0.
bool generic_richardson_oracle(const ParabolicSpec& par, int samples, std::uint32_t seed = 20041u);

/// Parabolic data of an even grading, up to conjugation (the inverse of
/// parabolic_grading). Throws std::invalid_argument for odd gradings.
ParabolicSpec parabolic_of_even_grading(const GradingElement& h);
/// Sampling certificate for an even grading: true iff some sampled e in g_2
/// has dim g^e = dim g_0. Throws when g_2 = 0 or h is not even.
bool has_good_generic_element(const AlgebraBasis& g, const GradingElement& h, int samples,
                              std::uint32_t seed = 20041u);
/// The r even gradings with Pi_0 = {alpha_j} and label 2 on every other
/// simple root (dim g_0 = r + 2), j = 1..r.
std::vector<GradingElement> single_node_even_gradings(const AlgebraSpec& spec);

/// Worker count from GOODGRAD_THREADS, else the hardware concurrency.
unsigned worker_count();

}  // namespace goodgrad

#include "goodgrad/lie_algebra.hpp"

#include "goodgrad/classification.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace goodgrad {
namespace {

std::vector<AlgebraSpec> small_algebras() {
    std::vector<AlgebraSpec> out;
    for (int n = 1; n <= 6; ++n) {
        out.push_back(AlgebraSpec::gl(n));
        if (n >= 2) out.push_back(AlgebraSpec::sl(n));
        if (n % 2 == 0) out.push_back(AlgebraSpec::sp(n));
        if (n >= 3) out.push_back(AlgebraSpec::so(n));
    }
    return out;
}

std::size_t expected_dim(const AlgebraSpec& s) {
    const std::size_t n = static_cast<std::size_t>(s.size);
    switch (s.family) {
        case Family::GL: return n * n;
        case Family::SL: return n * n - 1;
        case Family::SP: return n * (n + 1) / 2;
        case Family::SO: return n * (n - 1) / 2;
    }
    return 0;
}

TEST(AlgebraBasis, Dimensions) {
    EXPECT_EQ(AlgebraBasis(AlgebraSpec::sp(2)).dim(), 3u);
    EXPECT_EQ(AlgebraBasis(AlgebraSpec::so(4)).dim(), 6u);
    EXPECT_EQ(AlgebraBasis(AlgebraSpec::gl(3)).dim(), 9u);
    for (const auto& s : small_algebras()) EXPECT_EQ(AlgebraBasis(s).dim(), expected_dim(s)) << s.name();
}

TEST(AlgebraBasis, RejectsBadSizes) {
    EXPECT_THROW(AlgebraBasis(AlgebraSpec::sp(3)), std::invalid_argument);
    EXPECT_THROW(AlgebraBasis(AlgebraSpec::so(2)), std::invalid_argument);
    EXPECT_THROW(AlgebraBasis(AlgebraSpec::sl(1)), std::invalid_argument);
    EXPECT_THROW(AlgebraBasis(AlgebraSpec::gl(0)), std::invalid_argument);
}

TEST(AlgebraBasis, BasisIsIndependentAndClosedUnderBracket) {
    for (const auto& s : small_algebras()) {
        if (s.size > 5) continue;
        const AlgebraBasis g(s);
        const Subspace span = g.flattened_span();
        EXPECT_EQ(span.dim(), g.dim()) << s.name();
        for (const auto& x : g.basis()) {
            EXPECT_TRUE(g.contains(x));
            for (const auto& y : g.basis()) EXPECT_TRUE(span.contains(bracket(x, y).flat())) << s.name();
        }
    }
}

TEST(AlgebraBasis, FormInvolutionFixesTheAlgebra) {
    for (const auto& s : small_algebras()) {
        if (s.is_type_a()) continue;
        const AlgebraBasis g(s);
        for (const auto& x : g.basis()) EXPECT_EQ(form_involution(s, x), x) << s.name();
    }
}

TEST(Bracket, SlTwoRelations) {
    const Matrix e = Matrix::unit(2, 0, 1);
    const Matrix f = Matrix::unit(2, 1, 0);
    const Matrix h = Matrix::unit(2, 0, 0) - Matrix::unit(2, 1, 1);
    EXPECT_EQ(bracket(e, f), h);
    EXPECT_EQ(bracket(h, e), e * Rational(2));
    EXPECT_TRUE(bracket(e, e).is_zero());
    EXPECT_THROW(bracket(e, Matrix::identity(3)), std::invalid_argument);
}

TEST(Centralizer, Examples) {
    const AlgebraBasis gl3(AlgebraSpec::gl(3));
    EXPECT_EQ(centralizer(gl3, Matrix(3, 3)).dim(), 9u);
    const Matrix regular = Matrix::unit(3, 0, 1) + Matrix::unit(3, 1, 2);
    EXPECT_EQ(centralizer(gl3, regular).dim(), 3u);
    EXPECT_EQ(centralizer(gl3, Matrix::unit(3, 0, 1)).dim(), 5u);
    EXPECT_THROW(centralizer(AlgebraBasis(AlgebraSpec::sl(3)), Matrix::identity(3)), std::invalid_argument);
}

TEST(Centralizer, MatchesConjugatePartitionFormula) {
    for (int n = 2; n <= 7; ++n) {
        std::vector<std::pair<AlgebraSpec, std::vector<Partition>>> cases{{AlgebraSpec::gl(n), partitions_of(n)},
                                                                          {AlgebraSpec::sl(n), partitions_of(n)}};
        if (n % 2 == 0) cases.push_back({AlgebraSpec::sp(n), symplectic_partitions(n)});
        if (n >= 3) cases.push_back({AlgebraSpec::so(n), orthogonal_partitions(n)});
        for (const auto& [spec, ps] : cases) {
            const AlgebraBasis g(spec);
            for (const auto& p : ps) {
                const Matrix e = nilpotent_of_partition(spec, p);
                EXPECT_EQ(centralizer(g, e).dim(), oracle::centralizer_dim_formula(spec, p))
                    << spec.name() << " " << p.to_string();
            }
        }
    }
}

TEST(GradedDecomposition, Examples) {
    const AlgebraBasis gl1(AlgebraSpec::gl(1));
    const GradedDecomposition zero = graded_decomposition(gl1, GradingElement{AlgebraSpec::gl(1), Vector(1)});
    EXPECT_EQ(zero.degrees(), std::vector<Rational>{0});

    const AlgebraBasis gl2(AlgebraSpec::gl(2));
    const auto d = graded_decomposition(gl2, GradingElement{AlgebraSpec::gl(2), Vector{1, -1}});
    EXPECT_EQ(d.degrees(), (std::vector<Rational>{-2, 0, 2}));
    EXPECT_EQ(d.dim(-2), 1u);
    EXPECT_EQ(d.dim(0), 2u);
    EXPECT_EQ(d.dim(2), 1u);

    const AlgebraSpec sp4 = AlgebraSpec::sp(4);
    const auto s = graded_decomposition(AlgebraBasis(sp4), dynkin_grading(sp4, Partition({2, 2})));
    EXPECT_EQ(s.degrees(), (std::vector<Rational>{-2, 0, 2}));
    EXPECT_EQ(s.dim(-2), 3u);
    EXPECT_EQ(s.dim(0), 4u);
    EXPECT_EQ(s.dim(2), 3u);
}

TEST(GradingElement, Validation) {
    EXPECT_THROW((GradingElement{AlgebraSpec::sl(2), Vector{1, 0}}.validate()), std::invalid_argument);
    EXPECT_THROW((GradingElement{AlgebraSpec::sp(2), Vector{1, 1}}.validate()), std::invalid_argument);
    EXPECT_THROW((GradingElement{AlgebraSpec::gl(2), Vector{1}}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((GradingElement{AlgebraSpec::so(3), Vector{1, 0, -1}}.validate()));
    EXPECT_THROW((GradingElement{AlgebraSpec::so(3), Vector{1, 1, -1}}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace goodgrad

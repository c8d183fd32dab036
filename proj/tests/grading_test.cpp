#include "goodgrad/grading.hpp"

#include "goodgrad/classification.hpp"
#include "goodgrad/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace goodgrad {
namespace {

std::vector<int> repeat(int value, int count) { return std::vector<int>(static_cast<std::size_t>(count), value); }

Partition minimal_type_a(int n) {
    std::vector<int> parts{2};
    for (int i = 0; i < n - 2; ++i) parts.push_back(1);
    return Partition(parts);
}

TEST(JordanType, OfPyramidNilpotents) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : partitions_of(n)) {
            for (const auto& pyr : enumerate_pyramids(p)) {
                EXPECT_EQ(jordan_type(nilpotent_of_pyramid(AlgebraSpec::gl(n), pyr)), p) << p.to_string();
            }
        }
    }
    for (int n = 2; n <= 8; n += 2) {
        for (const auto& p : symplectic_partitions(n)) {
            for (const auto& pyr : symplectic_pyramids(p)) {
                EXPECT_EQ(jordan_type(nilpotent_of_pyramid(AlgebraSpec::sp(n), pyr)), p) << p.to_string();
            }
        }
    }
    for (int n = 3; n <= 8; ++n) {
        for (const auto& p : orthogonal_partitions(n)) {
            for (const auto& pyr : orthogonal_pyramids(p)) {
                EXPECT_EQ(jordan_type(nilpotent_of_pyramid(AlgebraSpec::so(n), pyr)), p) << p.to_string();
            }
        }
    }
}

TEST(JordanType, RejectsNonNilpotent) {
    EXPECT_THROW(jordan_type(Matrix::identity(3)), std::invalid_argument);
}

TEST(Characteristic, KnownLabels) {
    for (int n = 2; n <= 6; ++n) {
        const auto spec = AlgebraSpec::sl(n);
        const AlgebraBasis g(spec);
        const auto regular = characteristic_of(g, dynkin_grading(spec, Partition({n})));
        EXPECT_EQ(regular.labels, repeat(2, n - 1));
        if (n >= 3) {
            auto expected = repeat(0, n - 1);
            expected.front() = expected.back() = 1;
            EXPECT_EQ(characteristic_of(g, dynkin_grading(spec, minimal_type_a(n))).labels, expected);
        }
    }
    const auto sl3 = AlgebraSpec::sl(3);
    EXPECT_EQ(characteristic_of(AlgebraBasis(sl3), dynkin_grading(sl3, Partition({2, 1}))).labels,
              (std::vector<int>{1, 1}));

    const auto sp6 = AlgebraSpec::sp(6);
    const AlgebraBasis c3(sp6);
    EXPECT_EQ(characteristic_of(c3, dynkin_grading(sp6, Partition({6}))).labels, (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(characteristic_of(c3, dynkin_grading(sp6, Partition({2, 1, 1, 1, 1}))).labels,
              (std::vector<int>{1, 0, 0}));

    const auto so7 = AlgebraSpec::so(7);
    const AlgebraBasis b3(so7);
    EXPECT_EQ(characteristic_of(b3, dynkin_grading(so7, Partition({7}))).labels, (std::vector<int>{2, 2, 2}));
    EXPECT_EQ(characteristic_of(b3, dynkin_grading(so7, Partition({3, 1, 1, 1, 1}))).labels,
              (std::vector<int>{2, 0, 0}));
    EXPECT_EQ(characteristic_of(b3, dynkin_grading(so7, Partition({2, 2, 1, 1, 1}))).labels,
              (std::vector<int>{0, 1, 0}));

    const auto so8 = AlgebraSpec::so(8);
    EXPECT_EQ(characteristic_of(AlgebraBasis(so8), dynkin_grading(so8, Partition({7, 1}))).labels,
              (std::vector<int>{2, 2, 2, 2}));
}

TEST(Characteristic, RejectsNonIntegral) {
    const auto spec = AlgebraSpec::gl(2);
    GradingElement h{spec, {Rational(1, 2), Rational(0)}};
    EXPECT_THROW(characteristic_of(AlgebraBasis(spec), h), std::invalid_argument);
}

TEST(Characteristic, PyramidAndDominantChamberAgree) {
    for (int n = 2; n <= 6; ++n) {
        const auto spec = AlgebraSpec::sl(n);
        const AlgebraBasis g(spec);
        for (const auto& p : partitions_of(n)) {
            for (const auto& pyr : enumerate_pyramids(p)) {
                const auto h = grading_of_pyramid(spec, pyr);
                if (!graded_decomposition(g, h).is_integral()) continue;
                EXPECT_EQ(characteristic_from_pyramid(spec, pyr), characteristic_of(g, h)) << p.to_string();
            }
        }
    }
    for (int n = 4; n <= 8; n += 2) {
        const auto spec = AlgebraSpec::sp(n);
        const AlgebraBasis g(spec);
        for (const auto& p : symplectic_partitions(n)) {
            for (const auto& pyr : symplectic_pyramids(p)) {
                const auto h = grading_of_pyramid(spec, pyr);
                if (!graded_decomposition(g, h).is_integral()) continue;
                EXPECT_EQ(characteristic_from_pyramid(spec, pyr), characteristic_of(g, h)) << p.to_string();
            }
        }
    }
    for (int n = 5; n <= 8; ++n) {
        const auto spec = AlgebraSpec::so(n);
        const AlgebraBasis g(spec);
        for (const auto& p : orthogonal_partitions(n)) {
            for (const auto& pyr : orthogonal_pyramids(p)) {
                const auto h = grading_of_pyramid(spec, pyr);
                if (!graded_decomposition(g, h).is_integral()) continue;
                EXPECT_EQ(characteristic_from_pyramid(spec, pyr), characteristic_of(g, h)) << p.to_string();
            }
        }
    }
}

TEST(Characteristic, RoundTripThroughLabels) {
    const auto spec = AlgebraSpec::so(8);
    const AlgebraBasis g(spec);
    for (const auto& p : orthogonal_partitions(8)) {
        const auto c = characteristic_of(g, dynkin_grading(spec, p));
        EXPECT_EQ(characteristic_of(g, grading_from_characteristic(spec, c.labels)), c);
    }
}

// Every pyramid grading is good, straight from the definition.
TEST(Goodness, PyramidGradingsAgainstDefinition) {
    for (int n = 2; n <= 5; ++n) {
        const auto spec = AlgebraSpec::gl(n);
        const AlgebraBasis g(spec);
        for (const auto& p : partitions_of(n)) {
            for (const auto& pyr : enumerate_pyramids(p)) {
                const auto h = grading_of_pyramid(spec, pyr);
                if (!graded_decomposition(g, h).is_integral()) continue;
                const auto e = nilpotent_of_pyramid(spec, pyr);
                if (e.is_zero()) continue;
                const auto cert = oracle::goodness_by_definition(g, h, e);
                EXPECT_TRUE(cert.injective && cert.surjective) << p.to_string();
                EXPECT_TRUE(is_good(g, h, e).verified);
            }
        }
    }
}

// Random (H, e) with e in g_2: library verdict equals the definition.
TEST(Goodness, RandomPairsAgainstDefinition) {
    std::mt19937 rng(7);
    const std::vector<AlgebraSpec> specs{AlgebraSpec::gl(3), AlgebraSpec::sl(4), AlgebraSpec::sp(4),
                                         AlgebraSpec::sp(6), AlgebraSpec::so(5), AlgebraSpec::so(6)};
    int good = 0;
    int bad = 0;
    for (const auto& spec : specs) {
        const AlgebraBasis g(spec);
        for (int trial = 0; trial < 60; ++trial) {
            const auto h = oracle::random_grading(spec, rng, 2);
            const auto e = oracle::random_degree_two(g, h, rng);
            if (e.is_zero()) continue;
            const auto cert = oracle::goodness_by_definition(g, h, e);
            EXPECT_EQ(cert.injective, cert.surjective) << spec.name();
            const bool verdict = GoodnessChecker(g, e).is_good_grading(h);
            EXPECT_EQ(verdict, cert.injective && cert.surjective) << spec.name();
            (verdict ? good : bad) += 1;
        }
    }
    EXPECT_GT(good, 0);
    EXPECT_GT(bad, 0);
}

TEST(Goodness, ShiftBeyondBoundIsNotGood) {
    // (3,1): the row of length 1 may move by at most 2(3-1) = 4 half-steps
    const auto spec = AlgebraSpec::gl(4);
    const Partition p({3, 1});
    const AlgebraBasis g(spec);
    const GoodnessChecker checker(g, nilpotent_of_partition(spec, p));
    const auto inside = shifted_grading(spec, p, {Rational(0), Rational(2)});
    const auto outside = shifted_grading(spec, p, {Rational(0), Rational(3)});
    EXPECT_TRUE(checker.is_good_grading(inside));
    EXPECT_FALSE(checker.is_good_grading(outside));
    EXPECT_FALSE(checker.has_degree_two(GradingElement{spec, Vector(4)}));
}

TEST(Goodness, ZeroGradingThrows) {
    const auto spec = AlgebraSpec::sl(3);
    const AlgebraBasis g(spec);
    const auto e = nilpotent_of_partition(spec, Partition({3}));
    EXPECT_THROW(is_good(g, GradingElement{spec, Vector(3)}, e), std::invalid_argument);
    EXPECT_THROW(GoodnessChecker(g, Matrix(3, 3)), std::invalid_argument);
    EXPECT_THROW(GoodnessChecker(g, Matrix::identity(3)), std::invalid_argument);
}

TEST(Goodness, CentralizerDegrees) {
    const auto spec = AlgebraSpec::gl(3);
    const AlgebraBasis g(spec);
    const auto pair = is_good(g, dynkin_grading(spec, Partition({3})), nilpotent_of_partition(spec, Partition({3})));
    ASSERT_TRUE(pair.verified);
    std::size_t total = 0;
    for (const auto& [d, k] : pair.centralizer_degrees) {
        EXPECT_GE(d, Rational(0));
        total += k;
    }
    EXPECT_EQ(total, 3u);
}

// Surjectivity of ad e: g_j -> g_{j+2} for j >= -1 fixes each graded piece of g^e.
TEST(Goodness, GradedCentralizerDimensions) {
    for (const auto& spec : {AlgebraSpec::sl(5), AlgebraSpec::sp(6), AlgebraSpec::so(8)}) {
        const AlgebraBasis g(spec);
        const auto parts = spec.family == Family::SL   ? partitions_of(spec.size)
                           : spec.family == Family::SP ? symplectic_partitions(spec.size)
                                                       : orthogonal_partitions(spec.size);
        for (const auto& p : parts) {
            const auto fam = classify(spec, p);
            for (const auto& entry : fam.entries) {
                const auto dec = graded_decomposition(g, entry.h);
                const auto pair = is_good(g, entry.h, fam.e);
                std::size_t total = 0;
                for (const auto& d : dec.degrees()) {
                    const auto it = pair.centralizer_degrees.find(d);
                    const std::size_t got = it == pair.centralizer_degrees.end() ? 0 : it->second;
                    const std::size_t expected = d < Rational(0) ? 0 : dec.dim(d) - dec.dim(d + Rational(2));
                    EXPECT_EQ(got, expected) << spec.name() << " " << p.to_string() << " degree " << d.to_string();
                    total += got;
                }
                EXPECT_EQ(total, dec.dim(Rational(0)) + dec.dim(Rational(1)));
                EXPECT_EQ(total, oracle::centralizer_dim_formula(spec, p));
            }
        }
    }
}

TEST(Duality, NondegenerateOnEveryGoodPair) {
    for (const auto& spec : {AlgebraSpec::gl(4), AlgebraSpec::sp(6), AlgebraSpec::so(7)}) {
        const AlgebraBasis g(spec);
        std::vector<Partition> parts = spec.family == Family::GL   ? partitions_of(spec.size)
                                       : spec.family == Family::SP ? symplectic_partitions(spec.size)
                                                                   : orthogonal_partitions(spec.size);
        for (const auto& p : parts) {
            const auto fam = classify(spec, p);
            for (const auto& entry : fam.entries) {
                if (!graded_decomposition(g, entry.h).is_integral()) continue;
                EXPECT_TRUE(check_duality_form(g, entry.h, fam.e)) << p.to_string();
                EXPECT_TRUE(oracle::duality_nondegenerate(g, entry.h, fam.e)) << p.to_string();
            }
        }
    }
}

TEST(Duality, RejectsPairsThatAreNotGood) {
    const auto spec = AlgebraSpec::gl(4);
    const Partition p({3, 1});
    const AlgebraBasis g(spec);
    const auto bad = shifted_grading(spec, p, {Rational(0), Rational(3)});
    EXPECT_THROW(check_duality_form(g, bad, nilpotent_of_partition(spec, p)), std::invalid_argument);
}

TEST(TorusWeights, HoldForTypeA) {
    for (int n = 2; n <= 5; ++n) {
        const auto spec = AlgebraSpec::gl(n);
        const AlgebraBasis g(spec);
        for (const auto& p : partitions_of(n)) {
            const auto fam = classify(spec, p);
            for (const auto& entry : fam.entries) {
                if (!graded_decomposition(g, entry.h).is_integral()) continue;
                EXPECT_TRUE(check_torus_weights(g, entry.h, fam.e)) << p.to_string();
            }
        }
    }
    const auto sp4 = AlgebraSpec::sp(4);
    const auto fam = classify(sp4, Partition({4}));
    EXPECT_THROW(check_torus_weights(AlgebraBasis(sp4), fam.entries[0].h, fam.e), std::invalid_argument);
}

}  // namespace
}  // namespace goodgrad

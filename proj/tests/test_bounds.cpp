#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zetalab/bounds.hpp"

namespace {

using namespace zetalab;
using zetalab::testing::brute_power_sum;
using zetalab::testing::rel_diff;

real component(const BoundReport& r, const std::string& label) {
    for (const auto& c : r.breakdown)
        if (c.label == label) return c.value;
    ADD_FAILURE() << "missing component " << label;
    return NAN;
}

TEST(Cjs, Examples) {
    const BoundReport a = cjs_interval(1, 0.125L);
    EXPECT_EQ(a.lower, 8);
    EXPECT_EQ(a.upper, 16);
    const BoundReport b = cjs_interval(1, 1);
    EXPECT_EQ(b.lower, 1);
    EXPECT_EQ(b.upper, 2);
    for (real p : {0.3L, 1e-9L, 0.77L}) EXPECT_EQ(cjs_interval(3.5L, p).upper / cjs_interval(3.5L, p).lower, 2);
}

TEST(Cjs, RejectsInvalidProbability) {
    EXPECT_THROW(cjs_interval(1, 0), domain_error);
    EXPECT_THROW(cjs_interval(1, 1.5L), domain_error);
    EXPECT_THROW(cjs_interval(1, -0.1L), domain_error);
    EXPECT_THROW(cjs_interval(0, 0.5L), domain_error);
}

TEST(Cjs, MatchesSingleBoundAtDyadicProbability) {
    for (int k = 0; k <= 40; ++k) {
        const BoundReport r = cjs_interval(3, std::ldexp(1.0L, -k));
        EXPECT_EQ(r.upper, single_problem_bound({3, static_cast<real>(k)}).value()) << k;
    }
}

TEST(Cjs, PreservesProgramOrdering) {
    // more probable programs get smaller intervals
    real prev = 0;
    for (std::uint64_t phi = 3; phi < 200; ++phi) {
        const real p = 1 / static_cast<real>(phi + 1);
        const BoundReport r = cjs_interval(1, p);
        EXPECT_GT(r.lower, prev);
        prev = r.lower;
    }
}

TEST(SingleBound, Examples) {
    EXPECT_EQ(single_problem_bound({1, 0}).value(), 2);
    EXPECT_EQ(single_problem_bound({1, 10}).value(), 2048);
    EXPECT_EQ(single_problem_bound({3, 20}).value(), 6291456);
    EXPECT_THROW(single_problem_bound({0, 1}), domain_error);
    EXPECT_THROW(single_problem_bound({1, -1}), domain_error);
}

TEST(SingleBound, LogSpaceAgreesWithLinear) {
    for (real k = 0; k <= 50; k += 0.73L) {
        const ProblemSpec spec{2.5L, k};
        const Magnitude m = single_problem_bound(spec);
        const real linear = 2 * spec.t_pi * std::exp2(k);
        EXPECT_LT(rel_diff(m.value(), linear), 1e-12L);
        EXPECT_LT(rel_diff(Magnitude::from_log2(m.log2()).value(), linear), 1e-12L);
    }
}

TEST(SingleBound, HugeComplexityStaysRepresentable) {
    const Magnitude m = single_problem_bound({1, 1008.4L / std::numbers::ln2_v<real> * 20});
    EXPECT_NEAR(static_cast<double>(m.log2()), static_cast<double>(1 + 1008.4L / std::numbers::ln2_v<real> * 20), 1e-9);
    EXPECT_FALSE(m.fits());
    EXPECT_GE(m.mantissa, 1);
    EXPECT_LT(m.mantissa, 2);
    const Magnitude mid = single_problem_bound({1, 600});
    EXPECT_TRUE(mid.fits());
    EXPECT_EQ(mid.exponent, 601);
}

TEST(SingleBound, MonotoneInTimeAndComplexity) {
    EXPECT_LT(single_problem_bound({1, 5}).log2(), single_problem_bound({2, 5}).log2());
    EXPECT_LT(single_problem_bound({1, 5}).log2(), single_problem_bound({1, 6}).log2());
    EXPECT_LT(single_problem_bound({1, 499}).log2(), single_problem_bound({1, 501}).log2());
}

TEST(SequenceBound, Examples) {
    const std::vector<ProblemSpec> one{{3, 7}};
    EXPECT_EQ(sequence_bound(one).value(), single_problem_bound(one[0]).value());
    const std::vector<ProblemSpec> two{{3, 7}, {3, 7}};
    EXPECT_EQ(sequence_bound(two).value(), 2 * single_problem_bound(two[0]).value());
    const std::vector<ProblemSpec> mixed{{1, 1}, {1, 2}};
    EXPECT_EQ(sequence_bound(mixed).value(), 12);
    EXPECT_THROW(sequence_bound(std::vector<ProblemSpec>{}), domain_error);
}

TEST(SequenceBound, LogSpaceSum) {
    const std::vector<ProblemSpec> specs{{1, 2000}, {1, 2000}, {1, 10}};
    EXPECT_NEAR(static_cast<double>(sequence_bound(specs).log2()), 2002.0, 1e-12);
}

TEST(ConditionalBound, Examples) {
    const std::vector<ConditionalOutcome> single{{1, 0, 1}};
    EXPECT_NEAR(static_cast<double>(conditional_expected_bound(single).bound.value()), 2.0, 1e-15);
    EXPECT_EQ(conditional_expected_bound(single).truncation_mass, 0);
    const std::vector<ConditionalOutcome> pair{{1, 1, 0.5L}, {1, 2, 0.5L}};
    EXPECT_NEAR(static_cast<double>(conditional_expected_bound(pair).bound.value()), 6.0, 1e-15);
    const std::vector<ConditionalOutcome> partial{{1, 1, 0.25L}};
    EXPECT_EQ(conditional_expected_bound(partial).truncation_mass, 0.75L);
}

TEST(ConditionalBound, RejectsExcessMass) {
    const std::vector<ConditionalOutcome> heavy{{1, 1, 0.6L}, {1, 1, 0.6L}};
    EXPECT_THROW(conditional_expected_bound(heavy), domain_error);
    const std::vector<ConditionalOutcome> negative{{1, 1, -0.1L}};
    EXPECT_THROW(conditional_expected_bound(negative), domain_error);
    EXPECT_THROW(conditional_expected_bound(std::vector<ConditionalOutcome>{}), domain_error);
}

TEST(ConditionalBound, ReproducesDyadicZetaSum) {
    for (real s : {1.5L, 2.0L, 3.0L}) {
        const std::uint64_t n = 100000;
        const auto outcomes = iid_zeta_outcomes(n, s, 1);
        const ConditionalBound cb = conditional_expected_bound(outcomes);
        const BoundReport r = iid_zeta_bound(n, s, 1);
        EXPECT_LT(rel_diff(cb.bound.value(), r.lower), 1e-12L) << static_cast<double>(s);
        EXPECT_GT(cb.truncation_mass, 0);
    }
}

TEST(IidZetaBound, FourTermHandComputation) {
    const real pi = std::numbers::pi_v<real>;
    const real expected = (2 / (pi * pi / 6)) * (1 + 2.0L / 4 + 4.0L / 9 + 4.0L / 16);
    const BoundReport r = iid_zeta_bound(4, 2, 1);
    EXPECT_LT(rel_diff(r.lower, expected), 1e-17L);
    EXPECT_NEAR(static_cast<double>(r.lower), 2.6682, 1e-4);
}

/// (2 / zeta) sum_k 2^{ceil(log2 k)} k^{-s} term by term.
real brute_dyadic(std::uint64_t n, real s) {
    real sum = 0, comp = 0;
    for (std::uint64_t k = n; k >= 1; --k) {
        std::uint64_t w = 1;
        while (w < k) w <<= 1;
        const real y = static_cast<real>(w) * std::pow(static_cast<real>(k), -s) - comp;
        const real t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return 2 * sum / riemann_zeta(s).value;
}

TEST(IidZetaBound, BlockwiseEqualsBruteForce) {
    for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 1000ULL, 1024ULL, 1025ULL, 1000000ULL}) {
        for (real s : {1.001L, 1.5L, 2.0L}) {
            EXPECT_LT(rel_diff(iid_zeta_bound(n, s, 1).lower, brute_dyadic(n, s)), 1e-12L)
                << n << " " << static_cast<double>(s);
        }
    }
}

TEST(IidZetaBound, RelaxedMatchesDefinition) {
    const std::uint64_t n = 200000;
    const real s = 1.3L;
    const real expected = 4 * brute_power_sum(1, n, s - 1) / riemann_zeta(s).value;
    EXPECT_LT(rel_diff(iid_zeta_bound(n, s, 1).upper, expected), 1e-13L);
}

TEST(IidZetaBound, ExactNotAboveRelaxed) {
    for (std::uint64_t n : {1ULL, 10ULL, 12345ULL, 1000000000ULL, 1000000000000ULL, 1000000000000000000ULL}) {
        for (real s : {1.001L, 1.01L, 1.5L, 2.0L, 3.0L}) {
            const BoundReport r = iid_zeta_bound(n, s, 1);
            EXPECT_LE(r.lower, r.upper) << n << " " << static_cast<double>(s);
            EXPECT_GT(r.lower, 0);
        }
    }
}

TEST(IidZetaBound, PublishedConstant) {
    const BoundReport r = iid_zeta_bound(1000000000000ULL, 1.001L, 1);
    EXPECT_GE(r.upper, 3.85e9L);
    EXPECT_LE(r.upper, 3.93e9L);
    const real ratio = r.lower / r.upper;
    EXPECT_GT(ratio, 0.5L);
    EXPECT_LT(ratio, 1);
    EXPECT_EQ(component(r, "dyadic_blocks"), 41);
}

TEST(IidZetaBound, MonotoneInNAndT) {
    real prev = 0;
    for (std::uint64_t n = 1; n < 1000000000000ULL; n *= 7) {
        const BoundReport r = iid_zeta_bound(n, 1.2L, 1);
        EXPECT_GE(r.lower, prev);
        prev = r.lower;
    }
    EXPECT_LT(iid_zeta_bound(1000, 2, 1).upper, iid_zeta_bound(1000, 2, 2).upper);
}

TEST(IidZetaBound, RejectsOutOfDomain) {
    EXPECT_THROW(iid_zeta_bound(0, 2, 1), domain_error);
    EXPECT_THROW(iid_zeta_bound(10, 1, 1), domain_error);
    EXPECT_THROW(iid_zeta_bound(10, 2, 0), domain_error);
    EXPECT_THROW(iid_zeta_bound(2'000'000'000'000'000'000ULL, 2, 1), domain_error);
}

TEST(RandomTypingBound, Examples) {
    EXPECT_EQ(random_typing_bound(8, 1).value(), 512);
    EXPECT_EQ(random_typing_bound(1, 1).value(), 4);
    for (std::uint64_t m : {1ULL, 17ULL, 300ULL, 5000ULL})
        EXPECT_EQ(random_typing_bound(m, 2.5L).log2(), single_problem_bound({2.5L, static_cast<real>(m)}).log2());
    EXPECT_THROW(random_typing_bound(0, 1), domain_error);
}

TEST(SubprogramReport, Terms) {
    const BoundReport r = subprogram_entropy_report(4, 8, 1024, 1.1L);
    EXPECT_EQ(component(r, "database_bits"), 64);
    EXPECT_EQ(component(r, "log2_k"), 2);
    EXPECT_EQ(component(r, "log2_n"), 10);
    EXPECT_EQ(component(r, "log2_m"), 3);
    EXPECT_EQ(r.lower, component(r, "total_bits"));
    EXPECT_NEAR(static_cast<double>(component(r, "rate_bits")), static_cast<double>(r.lower / 1024), 1e-15);
}

TEST(SubprogramReport, TwoPointZipfTerm) {
    const BoundReport r = subprogram_entropy_report(1, 1, 2, 1);
    const double two_point = -(2.0 / 3) * std::log2(2.0 / 3) - (1.0 / 3) * std::log2(1.0 / 3);
    EXPECT_NEAR(static_cast<double>(component(r, "zipf_bits")), two_point, 1e-15);
    EXPECT_NEAR(two_point, 0.918, 1e-3);
}

TEST(SubprogramReport, RateDecreasesWithN) {
    real prev = INFINITY;
    for (std::uint64_t n = 2; n < 1000000; n *= 3) {
        const real rate = component(subprogram_entropy_report(4, 8, n, 1.1L), "rate_bits");
        EXPECT_LT(rate, prev);
        prev = rate;
    }
    EXPECT_THROW(subprogram_entropy_report(25, 8, 1024, 1.1L), domain_error);
}

}  // namespace

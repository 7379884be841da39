#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles/reference_values.hpp"
#include "test_support.hpp"
#include "zetalab/numerics.hpp"

namespace {

using namespace zetalab;
using zetalab::testing::brute_power_sum;
using zetalab::testing::ld;
using zetalab::testing::rel_diff;

constexpr long double eps_ld = 1.0842021724855044e-19L;

// The reference values are at the exact decimal s; the library sees s rounded
// to long double. Half an ulp of s times the next derivative bounds the shift.
long double input_shift(long double s, long double slope) { return eps_ld / 2 * s * std::fabs(slope); }

// |zeta''(s)| <= 2 / (s - 1)^3 + 2 on the reference grid
long double second_deriv_envelope(long double s) { return 2 / ((s - 1) * (s - 1) * (s - 1)) + 2; }

TEST(Zeta, MatchesReferenceGridWithinCertifiedBound) {
    for (const auto& ref : oracle::zeta_grid) {
        const real s = ld(ref.s);
        const real expected = ld(ref.zeta);
        const EvalResult z = riemann_zeta(s);
        SCOPED_TRACE(ref.s);
        EXPECT_LE(std::fabs(z.value - expected), z.abs_err + 4 * eps_ld * expected + input_shift(s, ld(ref.deriv)));
        EXPECT_LT(rel_diff(z.value, expected), 1e-15L);
        EXPECT_LE(z.abs_err, 1e-12L);
    }
}

TEST(Zeta, BothMethodsAgreeWithReference) {
    for (const auto& ref : oracle::zeta_grid) {
        const real s = ld(ref.s);
        if (s > 4) continue;
        SCOPED_TRACE(ref.s);
        const EvalResult a = zeta_stieltjes(s);
        const EvalResult b = zeta_euler_maclaurin(s);
        const real expected = ld(ref.zeta);
        const real shift = input_shift(s, ld(ref.deriv));
        EXPECT_LE(std::fabs(a.value - expected), a.abs_err + 4 * eps_ld * expected + shift);
        EXPECT_LE(std::fabs(b.value - expected), b.abs_err + 4 * eps_ld * expected + shift);
    }
}

TEST(Zeta, DerivativeMatchesReference) {
    for (const auto& ref : oracle::zeta_grid) {
        const real s = ld(ref.s);
        const real expected = ld(ref.deriv);
        SCOPED_TRACE(ref.s);
        const EvalResult d = riemann_zeta_deriv(s, {1e-9L});
        const real shift = input_shift(s, second_deriv_envelope(s));
        EXPECT_LT(d.value, 0);
        EXPECT_LE(std::fabs(d.value - expected), d.abs_err + 8 * eps_ld * std::fabs(expected) + shift);
        EXPECT_LT(rel_diff(d.value, expected), 1e-14L);
        const EvalResult em = zeta_deriv_euler_maclaurin(s);
        EXPECT_LE(std::fabs(em.value - expected), em.abs_err + 8 * eps_ld * std::fabs(expected) + shift);
    }
}

TEST(Zeta, ClosedForms) {
    const real pi = std::numbers::pi_v<real>;
    EXPECT_LT(rel_diff(riemann_zeta(2).value, pi * pi / 6), 1e-17L);
    EXPECT_LT(rel_diff(riemann_zeta(4).value, pi * pi * pi * pi / 90), 1e-17L);
    EXPECT_LT(rel_diff(riemann_zeta(6).value, std::pow(pi, 6) / 945), 1e-17L);
}

TEST(Zeta, LargeArgumentApproachesOne) {
    const EvalResult z = riemann_zeta(60);
    EXPECT_NEAR(static_cast<double>(z.value), 1.0, 1e-17);
    EXPECT_GE(z.value, 1);
}

TEST(Zeta, RejectsOutOfDomain) {
    EXPECT_THROW(riemann_zeta(1), domain_error);
    EXPECT_THROW(riemann_zeta(0.5L), domain_error);
    EXPECT_THROW(riemann_zeta(NAN), domain_error);
    EXPECT_THROW(riemann_zeta(INFINITY), domain_error);
    EXPECT_THROW(riemann_zeta_deriv(-2), domain_error);
    EXPECT_THROW(zeta_stieltjes(4.5L), domain_error);
}

TEST(Zeta, UnreachableTargetRaisesPrecisionErrorWithBestEffort) {
    PrecisionConfig cfg;
    cfg.target_abs_err = 1e-40L;
    try {
        riemann_zeta(2, cfg);
        FAIL() << "expected precision_error";
    } catch (const precision_error& e) {
        const real pi = std::numbers::pi_v<real>;
        EXPECT_LT(rel_diff(e.best_effort().value, pi * pi / 6), 1e-15L);
        EXPECT_GT(e.best_effort().abs_err, 0);
    }
}

TEST(Zeta, DerivativeNearPoleNeedsLooserTargetButEntropyDoesNot) {
    EXPECT_THROW(riemann_zeta_deriv(1.0005L), precision_error);
    EXPECT_NO_THROW(zeta_entropy(1.0005L));
}

TEST(Zeta, RejectsInvalidPrecisionConfig) {
    EXPECT_THROW(riemann_zeta(2, {1e-12L, 10'000'000, 7}), domain_error);
    EXPECT_THROW(riemann_zeta(2, {1e-12L, 10'000'000, 16}), domain_error);
    EXPECT_THROW(riemann_zeta(2, {0, 10'000'000, 8}), domain_error);
    EXPECT_THROW(riemann_zeta(2, {1e-12L, 4, 8}), domain_error);
}

TEST(Zeta, MonotoneDecreasing) {
    real prev = riemann_zeta(1.0001L).value;
    for (real s = 1.01L; s < 8; s += 0.37L) {
        const real z = riemann_zeta(s).value;
        EXPECT_LT(z, prev) << "s=" << static_cast<double>(s);
        prev = z;
    }
}

TEST(HarmonicPartial, MatchesReference) {
    for (const auto& ref : oracle::harmonic) {
        SCOPED_TRACE(std::to_string(ref.n) + " " + ref.s);
        const EvalResult h = harmonic_partial(ref.n, ld(ref.s));
        const real expected = ld(ref.value);
        EXPECT_LT(rel_diff(h.value, expected), 1e-15L);
        EXPECT_LE(std::fabs(h.value - expected), h.abs_err + 4 * eps_ld * expected);
    }
}

TEST(HarmonicPartial, MatchesBruteForceAcrossDirectLimit) {
    for (std::uint64_t n : {999'999ULL, 1'000'000ULL, 1'000'001ULL, 2'500'000ULL}) {
        for (real s : {0.5L, 1.0L, 1.2L, 2.0L}) {
            const real expected = brute_power_sum(1, n, s);
            EXPECT_LT(rel_diff(harmonic_partial(static_cast<std::int64_t>(n), s).value, expected), 1e-15L)
                << n << " " << static_cast<double>(s);
        }
    }
}

TEST(HarmonicPartial, SmallCasesAreExact) {
    EXPECT_EQ(harmonic_partial(1, 3).value, 1);
    EXPECT_EQ(harmonic_partial(2, 1).value, 1.5L);
    EXPECT_NEAR(static_cast<double>(harmonic_partial(3, 1).value), 11.0 / 6.0, 1e-18);
}

TEST(HarmonicPartial, ApproachesZeta) {
    const real z = riemann_zeta(1.5L).value;
    const real h = harmonic_partial(1'000'000'000'000'000'000LL, 1.5L).value;
    // tail ~ 2 N^{-1/2} = 2e-9
    EXPECT_NEAR(static_cast<double>(z - h), 2e-9, 1e-11);
}

TEST(PowerSumRange, IsAdditive) {
    const real s = 1.001L;
    const real whole = harmonic_partial(10'000'000'000LL, s).value;
    const real parts = power_sum_range(1, 4'000'000'000ULL, s).value + power_sum_range(4'000'000'001ULL, 10'000'000'000ULL, s).value;
    EXPECT_LT(rel_diff(parts, whole), 1e-17L);
}

TEST(PowerSumRange, RejectsEmptyRange) {
    EXPECT_THROW(power_sum_range(5, 4, 2), domain_error);
    EXPECT_THROW(power_sum_range(0, 4, 2), domain_error);
    EXPECT_THROW(harmonic_partial(0, 2), domain_error);
    EXPECT_THROW(harmonic_partial(10, 0), domain_error);
}

TEST(LogWeightedPartial, MatchesReference) {
    for (const auto& ref : oracle::log_weighted) {
        SCOPED_TRACE(std::to_string(ref.n) + " " + ref.s);
        const EvalResult l = log_weighted_partial(ref.n, ld(ref.s));
        const real expected = ld(ref.value);
        EXPECT_LT(rel_diff(l.value, expected), 1e-14L);
        EXPECT_LE(std::fabs(l.value - expected), l.abs_err + 16 * eps_ld * expected);
    }
    EXPECT_EQ(log_weighted_partial(1, 2).value, 0);
}

TEST(ZetaEntropy, MatchesReferenceInBothBases) {
    for (const auto& ref : oracle::zeta_grid) {
        const real s = ld(ref.s);
        SCOPED_TRACE(ref.s);
        const EvalResult h = zeta_entropy(s);
        const real expected = ld(ref.entropy);
        EXPECT_NEAR(static_cast<double>(h.value), static_cast<double>(expected), 1e-9);
        // |dH/ds| <= s / (s - 1)^2 + 1 on the grid
        const real shift = input_shift(s, s / ((s - 1) * (s - 1)) + 1);
        EXPECT_LE(std::fabs(h.value - expected), h.abs_err + 16 * eps_ld * expected + shift);
        const EvalResult bits = zeta_entropy(s, LogBase::bits);
        EXPECT_LT(rel_diff(bits.value * std::numbers::ln2_v<real>, h.value), 1e-18L);
    }
}

TEST(ZetaEntropy, MethodsAgree) {
    for (real s : {1.001L, 1.01L, 1.1L, 1.3L, 2.0L, 3.5L}) {
        const real a = zeta_entropy(s, LogBase::nats, {}, ZetaMethod::stieltjes).value;
        const real b = zeta_entropy(s, LogBase::nats, {}, ZetaMethod::euler_maclaurin).value;
        EXPECT_LT(std::fabs(a - b), 1e-12L) << static_cast<double>(s);
    }
}

TEST(ZetaEntropy, DecreasesInS) {
    real prev = zeta_entropy(1.0005L).value;
    for (real s : {1.001L, 1.01L, 1.1L, 1.5L, 2.0L, 4.0L, 10.0L}) {
        const real h = zeta_entropy(s).value;
        EXPECT_LT(h, prev);
        prev = h;
    }
}

TEST(ZipfEntropy, MatchesReference) {
    for (const auto& ref : oracle::zipf_entropy) {
        SCOPED_TRACE(std::to_string(ref.n) + " " + ref.s);
        EXPECT_NEAR(static_cast<double>(zipf_entropy(ref.n, ld(ref.s)).value), static_cast<double>(ld(ref.value)), 1e-12);
    }
}

TEST(ZipfEntropy, EdgeCases) {
    EXPECT_EQ(zipf_entropy(1, 2).value, 0);
    // s = 1 over two ranks: probabilities 2/3, 1/3
    const real two_point = -(2.0L / 3) * std::log2(2.0L / 3) - (1.0L / 3) * std::log2(1.0L / 3);
    EXPECT_NEAR(static_cast<double>(zipf_entropy(2, 1, LogBase::bits).value), static_cast<double>(two_point), 1e-15);
    EXPECT_THROW(zipf_entropy(0, 2), domain_error);
    EXPECT_THROW(zipf_entropy(10, 0.9L), domain_error);
}

TEST(ZipfEntropy, ConvergesToZetaEntropy) {
    const real zeta_h = zeta_entropy(2).value;
    real prev_gap = 1;
    for (std::int64_t n : {100LL, 10'000LL, 1'000'000LL}) {
        const real gap = zeta_h - zipf_entropy(n, 2).value;
        EXPECT_GT(gap, 0);
        EXPECT_LT(gap, prev_gap);
        prev_gap = gap;
    }
    EXPECT_LT(prev_gap, 2e-5L);
}

}  // namespace

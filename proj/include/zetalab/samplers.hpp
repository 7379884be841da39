#pragma once

// Exact samplers for the zeta and Zipf distributions, uniform random
// programs, and a Pearson chi-square goodness-of-fit test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "zetalab/core.hpp"
#include "zetalab/programs.hpp"
#include "zetalab/random.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

/// Smallest exponent offset s - 1 accepted by the zeta sampler. Below it a
/// single draw may need tens of megabytes to represent.
inline constexpr real min_zeta_sampler_offset = 1e-6L;

/// Devroye's rejection sampler for P(Z = k) = k^{-s} / zeta(s): a Pareto
/// proposal X = floor(U^{-1/(s-1)}) accepted with probability proportional to
/// the ratio of the zeta pmf to the envelope. The support is not truncated;
/// draws beyond 2^63 carry 64 significant bits.
class ZetaSampler {
public:
    explicit ZetaSampler(real s) : s_(s) {
        detail::require(std::isfinite(s) && s > 1, "zeta sampling requires s > 1");
        detail::require(s - 1 >= min_zeta_sampler_offset, "zeta sampling requires s >= 1 + 1e-6");
        sm1_ = s - 1;
        b_ = std::exp2(sm1_);
        bm1_ = std::expm1(sm1_ * std::numbers::ln2_v<real>);
    }

    real s() const { return s_; }

    BigUInt operator()(RandomStream& rng) const {
        for (;;) {
            const real u = rng.uniform();
            const real v = rng.uniform();
            const real log_x = -std::log(u) / sm1_;
            if (log_x < 43) {  // e^43 < 2^63
                const auto x = static_cast<std::uint64_t>(std::floor(std::exp(log_x)));
                const real xr = static_cast<real>(x);
                const real l = sm1_ * std::log1p(1 / xr);
                const real t = std::exp(l);
                if (v * xr * std::expm1(l) / bm1_ <= t / b_) return BigUInt(x);
            } else {
                // X (T - 1) -> s - 1 and T -> 1 once 1/X is below the precision.
                if (v * sm1_ / bm1_ <= 1 / b_) return from_log(log_x);
            }
        }
    }

private:
    static BigUInt from_log(real log_x) {
        const real log2_x = log_x / std::numbers::ln2_v<real>;
        const real whole = std::floor(log2_x);
        // 63-bit mantissa in [2^62, 2^63), scaled by 2^{whole - 62}
        const auto mantissa = static_cast<std::uint64_t>(std::exp2(log2_x - whole + 62));
        BigUInt x(mantissa);
        if (whole >= 62) {
            x <<= static_cast<unsigned>(whole - 62);
        } else {
            x >>= static_cast<unsigned>(62 - whole);
        }
        return x;
    }

    real s_;
    real sm1_;
    real b_;
    real bm1_;
};

inline BigUInt sample_zeta(real s, RandomStream& rng) { return ZetaSampler(s)(rng); }

/// Inversion sampler for Z_s^{(n)} over a cumulative table built once.
class ZipfSampler {
public:
    ZipfSampler(std::uint64_t n, real s) : n_(n), s_(s) {
        detail::require(n >= 1, "zipf sampling requires n >= 1");
        detail::require(std::isfinite(s) && s >= 0, "zipf sampling requires s >= 0");
        cdf_.resize(n);
        CompensatedSum<real> acc;
        std::vector<real> partial(n);
        for (std::uint64_t k = 1; k <= n; ++k) {
            acc += std::pow(static_cast<real>(k), -s);
            partial[k - 1] = acc.value();
        }
        const real total = partial.back();
        for (std::uint64_t i = 0; i < n; ++i) cdf_[i] = static_cast<double>(partial[i] / total);
        cdf_.back() = 1.0;
    }

    std::uint64_t n() const { return n_; }
    real s() const { return s_; }

    /// Rank in [1, n].
    std::uint64_t operator()(RandomStream& rng) const {
        const double u = rng.uniform();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return std::min<std::uint64_t>(static_cast<std::uint64_t>(it - cdf_.begin()) + 1, n_);
    }

private:
    std::uint64_t n_;
    real s_;
    std::vector<double> cdf_;
};

/// Single draw; rebuilds the table, so prefer ZipfSampler for repeated use.
inline std::uint64_t sample_zipf(std::uint64_t n, real s, RandomStream& rng) {
    return ZipfSampler(n, s)(rng);
}

/// m fair-coin bits; not canonicalized.
inline Program sample_uniform_program(std::size_t m, RandomStream& rng) {
    detail::require(m >= 1, "program length must be at least 1");
    std::vector<bool> bits(m);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i % 64 == 0) word = rng.next_u64();
        bits[i] = (word >> (63 - i % 64)) & 1U;
    }
    return Program(std::move(bits));
}

struct GofReport {
    double statistic = 0;
    double p_value = 1;
    std::size_t bins = 0;
    std::size_t samples = 0;
};

/// Explicit bins for support values first..last; everything above `last`
/// forms a tail bin. Adjacent bins are merged from the tail inward until each
/// expects at least `min_expected` samples.
struct BinSpec {
    std::uint64_t first = 1;
    std::uint64_t last = 50;
    double min_expected = 5;
};

/// Pearson chi-square test of `samples` against `pmf`, which must sum to one
/// over [spec.first, inf).
inline GofReport gof_chi_square(std::span<const std::uint64_t> samples,
                                const std::function<double(std::uint64_t)>& pmf,
                                const BinSpec& spec = {}) {
    detail::require(spec.last >= spec.first, "bin spec requires last >= first");
    const std::size_t explicit_bins = spec.last - spec.first + 1;
    std::vector<double> observed(explicit_bins + 1, 0.0);
    for (std::uint64_t x : samples) {
        detail::require(x >= spec.first, "sample below the support of the pmf");
        observed[x > spec.last ? explicit_bins : x - spec.first] += 1;
    }
    const auto n = static_cast<double>(samples.size());
    std::vector<double> expected(explicit_bins + 1);
    CompensatedSum<double> mass;
    for (std::size_t i = 0; i < explicit_bins; ++i) {
        double p = pmf(spec.first + i);
        mass += p;
        expected[i] = n * p;
    }
    expected[explicit_bins] = n * std::max(0.0, 1.0 - mass.value());

    struct Bin {
        double observed;
        double expected;
    };
    std::vector<Bin> merged;
    Bin acc{0, 0};
    for (std::size_t i = expected.size(); i-- > 0;) {
        acc.observed += observed[i];
        acc.expected += expected[i];
        if (acc.expected >= spec.min_expected) {
            merged.push_back(acc);
            acc = {0, 0};
        }
    }
    if (acc.expected > 0 || acc.observed > 0) {
        if (merged.empty()) {
            merged.push_back(acc);
        } else {
            merged.back().observed += acc.observed;
            merged.back().expected += acc.expected;
        }
    }
    if (merged.size() < 2 || merged.back().expected < spec.min_expected)
        throw domain_error("insufficient samples for a chi-square test");

    GofReport report;
    for (const auto& b : merged) report.statistic += (b.observed - b.expected) * (b.observed - b.expected) / b.expected;
    report.bins = merged.size();
    report.samples = samples.size();
    const double dof = static_cast<double>(merged.size() - 1);
    report.p_value = boost::math::gamma_q(dof / 2, report.statistic / 2);
    return report;
}

}  // namespace zetalab

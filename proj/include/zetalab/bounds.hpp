#pragma once

// Training-time and entropy bound calculators: the conceptual-jump-size
// interval, per-problem and whole-sequence time bounds, the conditional
// expected bound, and their specializations to the process models.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "zetalab/core.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/processes.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

/// A positive quantity that may exceed the floating-point range, kept as
/// mantissa * 2^exponent with mantissa in [1, 2).
struct Magnitude {
    real mantissa = 0;
    std::int64_t exponent = 0;

    static Magnitude from_log2(real log2_value) {
        const real whole = std::floor(log2_value);
        return {std::exp2(log2_value - whole), static_cast<std::int64_t>(whole)};
    }

    static Magnitude from_value(real value) {
        detail::require(value > 0 && std::isfinite(value), "magnitudes are positive and finite");
        int e = 0;
        const real m = std::frexp(value, &e);  // m in [0.5, 1)
        return {2 * m, static_cast<std::int64_t>(e) - 1};
    }

    real log2() const { return std::log2(mantissa) + static_cast<real>(exponent); }

    /// Linear value; +inf when it does not fit in a long double.
    real value() const {
        if (exponent > std::numeric_limits<real>::max_exponent) return std::numeric_limits<real>::infinity();
        return std::ldexp(mantissa, static_cast<int>(exponent));
    }

    bool fits() const { return std::isfinite(value()); }
};

/// Above this many bits of program complexity, bounds are formed in log space.
inline constexpr real log_space_threshold = 500;

/// t(pi) and K(mu) in bits for one induction problem.
struct ProblemSpec {
    real t_pi = 1;
    real k_bits = 0;

    void validate() const {
        detail::require(std::isfinite(t_pi) && t_pi > 0, "running time must be positive");
        detail::require(std::isfinite(k_bits) && k_bits >= 0, "complexity must be non-negative");
    }
};

struct BoundReport {
    real lower = 0;
    real upper = 0;
    std::vector<Component> breakdown;
};

/// t/p <= solution time <= 2 t / p; the lower end is the conceptual jump size.
inline BoundReport cjs_interval(real t_pi, real p_pi) {
    detail::require(std::isfinite(t_pi) && t_pi > 0, "running time must be positive");
    detail::require(std::isfinite(p_pi) && p_pi > 0 && p_pi <= 1, "probability must lie in (0, 1]");
    const real cjs = t_pi / p_pi;
    return {cjs, 2 * cjs, {{"t", t_pi}, {"p", p_pi}, {"cjs", cjs}}};
}

/// 2 t 2^K.
inline Magnitude single_problem_bound(const ProblemSpec& spec) {
    spec.validate();
    if (spec.k_bits > log_space_threshold) return Magnitude::from_log2(1 + std::log2(spec.t_pi) + spec.k_bits);
    return Magnitude::from_value(2 * spec.t_pi * std::exp2(spec.k_bits));
}

namespace detail {

/// log2 of sum_i 2^{x_i}.
inline real log2_sum_exp2(std::span<const real> logs) {
    const real top = *std::max_element(logs.begin(), logs.end());
    CompensatedSum<real> acc;
    for (real x : logs) acc += std::exp2(x - top);
    return top + std::log2(acc.value());
}

}  // namespace detail

/// Sum of the single-problem bounds.
inline Magnitude sequence_bound(std::span<const ProblemSpec> specs) {
    detail::require(!specs.empty(), "sequence bound needs at least one problem");
    std::vector<real> logs;
    logs.reserve(specs.size());
    bool linear = true;
    for (const auto& spec : specs) {
        spec.validate();
        linear = linear && spec.k_bits <= log_space_threshold;
        logs.push_back(1 + std::log2(spec.t_pi) + spec.k_bits);
    }
    if (linear) {
        CompensatedSum<real> acc;
        for (const auto& spec : specs) acc += 2 * spec.t_pi * std::exp2(spec.k_bits);
        if (std::isfinite(acc.value())) return Magnitude::from_value(acc.value());
    }
    return Magnitude::from_log2(detail::log2_sum_exp2(logs));
}

/// One enumerated outcome: running time, conditional complexity in bits, and
/// conditional probability.
struct ConditionalOutcome {
    real t_pi = 1;
    real k_cond_bits = 0;
    real p_cond = 0;
};

struct ConditionalBound {
    Magnitude bound;
    real total_mass = 0;       ///< sum of the enumerated probabilities
    real truncation_mass = 0;  ///< 1 - total_mass: probability left out
};

inline constexpr real mass_tolerance = 1e-12L;

/// sum 2 t 2^{K'} P' over a finite enumeration of outcomes.
inline ConditionalBound conditional_expected_bound(std::span<const ConditionalOutcome> outcomes) {
    detail::require(!outcomes.empty(), "conditional bound needs at least one outcome");
    CompensatedSum<real> mass;
    std::vector<real> logs;
    logs.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        detail::require(std::isfinite(o.t_pi) && o.t_pi > 0, "running time must be positive");
        detail::require(std::isfinite(o.k_cond_bits) && o.k_cond_bits >= 0, "complexity must be non-negative");
        detail::require(std::isfinite(o.p_cond) && o.p_cond >= 0, "probabilities must be non-negative");
        mass += o.p_cond;
        if (o.p_cond > 0) logs.push_back(1 + std::log2(o.t_pi) + o.k_cond_bits + std::log2(o.p_cond));
    }
    detail::require(mass.value() <= 1 + mass_tolerance, "outcome probabilities sum to more than 1");
    detail::require(!logs.empty(), "all outcomes have zero probability");
    ConditionalBound result;
    result.total_mass = mass.value();
    result.truncation_mass = std::max<real>(0, 1 - mass.value());
    result.bound = Magnitude::from_log2(detail::log2_sum_exp2(logs));
    return result;
}

/// The i.i.d. zeta outcome enumeration truncated at rank n: K'_k = ceil(log2 k),
/// P'_k = k^{-s} / zeta(s).
inline std::vector<ConditionalOutcome> iid_zeta_outcomes(std::uint64_t n, real s, real t_max,
                                                         const PrecisionConfig& cfg = {}) {
    detail::require(n >= 1, "enumeration needs at least one outcome");
    const real zeta = riemann_zeta(s, cfg).value;
    std::vector<ConditionalOutcome> out;
    out.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto bits = static_cast<real>(ceil_log2(BigUInt(k)));
        out.push_back({t_max, bits, std::pow(static_cast<real>(k), -s) / zeta});
    }
    return out;
}

inline constexpr std::uint64_t max_iid_zeta_rank = 1'000'000'000'000'000'000ULL;

/// Expected training time for i.i.d. zeta problems over the first n ranks.
///   lower: (2 t / zeta(s)) sum_k 2^{ceil(log2 k)} k^{-s}, summed blockwise
///          over the dyadic ranges (2^{j-1}, 2^j] where the weight is constant
///   upper: (4 t / zeta(s)) sum_k k^{1-s}
inline BoundReport iid_zeta_bound(std::uint64_t n, real s, real t_max, const PrecisionConfig& cfg = {}) {
    detail::require(n >= 1 && n <= max_iid_zeta_rank, "N must lie in 1..1e18");
    detail::require(std::isfinite(s) && s > 1, "i.i.d. zeta bound requires s > 1");
    detail::require(std::isfinite(t_max) && t_max > 0, "t_max must be positive");
    const EvalResult zeta = riemann_zeta(s, cfg);

    CompensatedSum<real> dyadic(1);  // k = 1 carries weight 2^0
    real dyadic_err = 0;
    int blocks = 1;
    for (int j = 1; (std::uint64_t{1} << (j - 1)) < n; ++j) {
        const std::uint64_t lo = (std::uint64_t{1} << (j - 1)) + 1;
        const std::uint64_t hi = std::min<std::uint64_t>(n, std::uint64_t{1} << j);
        const EvalResult block = power_sum_range(lo, hi, s, cfg);
        const real weight = std::ldexp(real{1}, j);
        dyadic += weight * block.value;
        dyadic_err += weight * block.abs_err;
        ++blocks;
    }
    const EvalResult relaxed = harmonic_partial(static_cast<std::int64_t>(n), s - 1, cfg);

    const real scale = t_max / zeta.value;
    BoundReport report;
    report.lower = 2 * scale * dyadic.value();
    report.upper = 4 * scale * relaxed.value;
    report.breakdown = {
        {"zeta_s", zeta.value},
        {"dyadic_sum", dyadic.value()},
        {"dyadic_sum_abs_err", dyadic_err},
        {"relaxed_sum", relaxed.value},
        {"relaxed_sum_abs_err", relaxed.abs_err},
        {"dyadic_blocks", static_cast<real>(blocks)},
        {"ratio", report.lower / report.upper},
    };
    return report;
}

/// t 2^{m+1}: the single-problem bound with K = m.
inline Magnitude random_typing_bound(std::uint64_t m, real t_pi) {
    detail::require(m >= 1, "random typing requires m >= 1");
    return single_problem_bound({t_pi, static_cast<real>(m)});
}

/// Total entropy of the sub-program model in bits (both ends of the report),
/// with its terms and the finite-n rate in the breakdown.
inline BoundReport subprogram_entropy_report(int k, std::uint64_t m, std::uint64_t n, real s,
                                             const PrecisionConfig& cfg = {}) {
    const SubprogramEntropy e = subprogram_entropy(k, m, n, s, cfg);
    return {e.total_bits,
            e.total_bits,
            {{"log2_k", e.log2_k},
             {"database_bits", e.database_bits},
             {"log2_n", e.log2_n},
             {"log2_m", e.log2_m},
             {"zipf_bits", e.zipf_bits},
             {"zipf_nats", e.zipf_nats},
             {"total_bits", e.total_bits},
             {"rate_bits", e.rate_bits},
             {"rate_as_written", e.rate_as_written}}};
}

}  // namespace zetalab

#pragma once

// Certified evaluation of zeta(s), zeta'(s), generalized harmonic partial
// sums and the zeta/Zipf entropies. Every result carries an absolute error
// bound covering truncation and rounding.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "zetalab/detail/euler_maclaurin.hpp"
#include "zetalab/detail/stieltjes_constants.hpp"
#include "zetalab/core.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

struct PrecisionConfig {
    real target_abs_err = 1e-12L;
    std::uint64_t max_terms = 10'000'000;
    /// Number of Bernoulli corrections; even, at most 14.
    int em_order = 8;

    void validate() const {
        detail::require(target_abs_err > 0 && std::isfinite(target_abs_err),
                        "target_abs_err must be positive and finite");
        detail::require(max_terms >= 16, "max_terms must be at least 16");
        detail::require(em_order > 0 && em_order % 2 == 0 && em_order <= detail::max_em_order,
                        "em_order must be an even integer in [2, 14]");
    }
};

enum class LogBase { nats, bits };

enum class ZetaMethod { automatic, stieltjes, euler_maclaurin };

/// Below this the Laurent expansion about s = 1 is used.
inline constexpr real stieltjes_switch = 1.5L;
/// Largest s - 1 for which the Laurent tail bound is certified.
inline constexpr real stieltjes_max_offset = 3.0L;
/// Partial sums up to this many terms are summed directly.
inline constexpr std::uint64_t direct_sum_limit = 1'000'000;

namespace detail {

inline detail::SumOptions sum_options(const PrecisionConfig& cfg, std::uint64_t direct_limit) {
    return {cfg.target_abs_err, cfg.max_terms, cfg.em_order, direct_limit};
}

// Matsuoka: |gamma_n| <= 1e-4 exp(n ln ln n) for n >= 10. Returns a bound on
// sum_{n >= first} 1e-4 (ln n)^n x^{n - shift} / (n - shift)!.
inline real stieltjes_tail_bound(real x, int first, int shift) {
    auto log_term = [&](int n) {
        real ln_n = std::log(static_cast<real>(n));
        return std::log(1e-4L) + n * std::log(ln_n) + (n - shift) * std::log(x) -
               std::lgamma(static_cast<real>(n - shift + 1));
    };
    real sum = 0;
    for (int n = first;; ++n) {
        real t = std::exp(log_term(n));
        real ratio = std::exp(log_term(n + 1) - log_term(n));
        if (ratio < 0.5L && n > first + 4) {
            // Ratios decrease from here on, so the rest is geometric.
            return sum + t / (1 - ratio);
        }
        sum += t;
        if (n > first + 2000) return infinity;
    }
}

inline void require_zeta_domain(real s) {
    require(std::isfinite(s) && s > 1, "zeta requires a finite s > 1");
}

inline void check_target(const EvalResult& r, const PrecisionConfig& cfg, const char* what) {
    if (!(r.abs_err <= cfg.target_abs_err)) throw precision_error(what, r);
}

}  // namespace detail

/// Laurent expansion of zeta about s = 1 using the embedded Stieltjes
/// constants; valid for 1 < s <= 4.
inline EvalResult zeta_stieltjes(real s) {
    detail::require_zeta_domain(s);
    const real x = s - 1;
    detail::require(x <= stieltjes_max_offset, "Stieltjes expansion certified only for s <= 4");
    const auto& g = detail::stieltjes_gamma;
    CompensatedSum<real> acc(1 / x);
    real magnitude = 1 / x;
    real power = 1;  // x^n / n!
    for (std::size_t n = 0; n < g.size(); ++n) {
        real t = ((n % 2 == 0) ? 1 : -1) * g[n] * power;
        acc += t;
        magnitude += std::fabs(t);
        power *= x / static_cast<real>(n + 1);
    }
    real tail = detail::stieltjes_tail_bound(x, static_cast<int>(g.size()), 0);
    real v = acc.value();
    return {v, tail + 4 * detail::ld_eps * magnitude + 2 * detail::ld_eps * std::fabs(v)};
}

inline EvalResult zeta_deriv_stieltjes(real s) {
    detail::require_zeta_domain(s);
    const real x = s - 1;
    detail::require(x <= stieltjes_max_offset, "Stieltjes expansion certified only for s <= 4");
    const auto& g = detail::stieltjes_gamma;
    CompensatedSum<real> acc(-1 / (x * x));
    real magnitude = 1 / (x * x);
    real power = 1;  // x^{n-1} / (n-1)!
    for (std::size_t n = 1; n < g.size(); ++n) {
        real t = ((n % 2 == 0) ? 1 : -1) * g[n] * power;
        acc += t;
        magnitude += std::fabs(t);
        power *= x / static_cast<real>(n);
    }
    real tail = detail::stieltjes_tail_bound(x, static_cast<int>(g.size()), 1);
    real v = acc.value();
    return {v, tail + 4 * detail::ld_eps * magnitude + 2 * detail::ld_eps * std::fabs(v)};
}

inline EvalResult zeta_euler_maclaurin(real s, const PrecisionConfig& cfg = {}) {
    detail::require_zeta_domain(s);
    cfg.validate();
    return detail::power_log_sum(detail::PowerLogTerm(s, 0), 1, 0, detail::sum_options(cfg, 0));
}

inline EvalResult zeta_deriv_euler_maclaurin(real s, const PrecisionConfig& cfg = {}) {
    detail::require_zeta_domain(s);
    cfg.validate();
    auto r =
        detail::power_log_sum(detail::PowerLogTerm(s, 1), 1, 0, detail::sum_options(cfg, 0));
    return {-r.value, r.abs_err};
}

namespace detail {

inline bool use_stieltjes(real s, ZetaMethod method) {
    switch (method) {
        case ZetaMethod::stieltjes: return true;
        case ZetaMethod::euler_maclaurin: return false;
        case ZetaMethod::automatic: break;
    }
    return s < stieltjes_switch;
}

}  // namespace detail

/// zeta(s) for real s > 1.
inline EvalResult riemann_zeta(real s, const PrecisionConfig& cfg = {},
                               ZetaMethod method = ZetaMethod::automatic) {
    detail::require_zeta_domain(s);
    cfg.validate();
    EvalResult r = detail::use_stieltjes(s, method) ? zeta_stieltjes(s)
                                                    : zeta_euler_maclaurin(s, cfg);
    detail::check_target(r, cfg, "zeta: target precision not reached");
    return r;
}

/// zeta'(s) for real s > 1; always negative.
inline EvalResult riemann_zeta_deriv(real s, const PrecisionConfig& cfg = {},
                                     ZetaMethod method = ZetaMethod::automatic) {
    detail::require_zeta_domain(s);
    cfg.validate();
    EvalResult r = detail::use_stieltjes(s, method) ? zeta_deriv_stieltjes(s)
                                                    : zeta_deriv_euler_maclaurin(s, cfg);
    detail::check_target(r, cfg, "zeta': target precision not reached");
    return r;
}

/// sum_{k=lo}^{hi} k^{-s}, 1 <= lo <= hi.
inline EvalResult power_sum_range(std::uint64_t lo, std::uint64_t hi, real s,
                                  const PrecisionConfig& cfg = {}) {
    detail::require(lo >= 1 && lo <= hi, "power_sum_range requires 1 <= lo <= hi");
    detail::require(std::isfinite(s) && s > 0, "power_sum_range requires s > 0");
    cfg.validate();
    return detail::power_log_sum(detail::PowerLogTerm(s, 0), lo, hi,
                                 detail::sum_options(cfg, direct_sum_limit));
}

/// H_{N,s} = sum_{k=1}^{N} k^{-s}. Direct summation up to 10^6 terms,
/// Euler-Maclaurin above (cost independent of N).
inline EvalResult harmonic_partial(std::int64_t n, real s, const PrecisionConfig& cfg = {}) {
    detail::require(n >= 1, "harmonic_partial requires N >= 1");
    return power_sum_range(1, static_cast<std::uint64_t>(n), s, cfg);
}

/// sum_{l=1}^{N} ln(l) / l^s.
inline EvalResult log_weighted_partial(std::int64_t n, real s, const PrecisionConfig& cfg = {}) {
    detail::require(n >= 1, "log_weighted_partial requires N >= 1");
    detail::require(std::isfinite(s) && s > 0, "log_weighted_partial requires s > 0");
    cfg.validate();
    if (n == 1) return {0, 0};
    return detail::power_log_sum(detail::PowerLogTerm(s, 1), 1, static_cast<std::uint64_t>(n),
                                 detail::sum_options(cfg, direct_sum_limit));
}

namespace detail {

inline EvalResult to_base(EvalResult nats, LogBase base) {
    if (base == LogBase::nats) return nats;
    return {nats.value / std::numbers::ln2_v<real>, nats.abs_err / std::numbers::ln2_v<real>};
}

/// ln Z + (s / Z) * L with first-order error propagation.
inline EvalResult entropy_from_sums(EvalResult norm, EvalResult log_sum, real s) {
    const real z = norm.value;
    const real l = log_sum.value;
    const real a = std::log(z);
    const real b = s * l / z;
    const real d_norm = std::fabs(1 / z - s * l / (z * z));
    const real d_log = std::fabs(s / z);
    real err = d_norm * norm.abs_err + d_log * log_sum.abs_err;
    // second order in the normalizer error, kept for tiny z only
    err += 2 * (norm.abs_err / z) * (norm.abs_err / z) * (1 + std::fabs(b));
    err += 4 * ld_eps * (std::fabs(a) + std::fabs(b));
    return {a + b, err};
}

}  // namespace detail

/// Entropy of the zeta distribution: ln zeta(s) - s zeta'(s) / zeta(s).
inline EvalResult zeta_entropy(real s, LogBase base = LogBase::nats,
                               const PrecisionConfig& cfg = {},
                               ZetaMethod method = ZetaMethod::automatic) {
    detail::require_zeta_domain(s);
    EvalResult z = riemann_zeta(s, cfg, method);
    // zeta' enters the entropy as s zeta'/zeta, so its target scales by zeta/s
    PrecisionConfig deriv_cfg = cfg;
    deriv_cfg.target_abs_err = cfg.target_abs_err * std::max<real>(1, z.value / s);
    EvalResult dz = riemann_zeta_deriv(s, deriv_cfg, method);
    // -zeta' is the infinite log-weighted sum
    return detail::to_base(detail::entropy_from_sums(z, {-dz.value, dz.abs_err}, s), base);
}

/// Entropy of Z_s^{(n)}: ln H_{n,s} + (s / H_{n,s}) sum_{l<=n} ln(l) / l^s.
inline EvalResult zipf_entropy(std::int64_t n, real s, LogBase base = LogBase::nats,
                               const PrecisionConfig& cfg = {}) {
    detail::require(n >= 1, "zipf_entropy requires n >= 1");
    detail::require(std::isfinite(s) && s >= 1, "zipf_entropy requires s >= 1");
    if (n == 1) return {0, 0};
    EvalResult h = harmonic_partial(n, s, cfg);
    EvalResult l = log_weighted_partial(n, s, cfg);
    return detail::to_base(detail::entropy_from_sums(h, l, s), base);
}

}  // namespace zetalab

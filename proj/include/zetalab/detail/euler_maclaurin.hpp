#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "zetalab/core.hpp"
#include "zetalab/summation.hpp"

namespace zetalab::detail {

inline constexpr real ld_eps = std::numeric_limits<real>::epsilon();
inline constexpr real infinity = std::numeric_limits<real>::infinity();

// B_2, B_4, ..., B_30
inline constexpr std::array<real, 15> bernoulli_even = {
    1.0L / 6,
    -1.0L / 30,
    1.0L / 42,
    -1.0L / 30,
    5.0L / 66,
    -691.0L / 2730,
    7.0L / 6,
    -3617.0L / 510,
    43867.0L / 798,
    -174611.0L / 330,
    854513.0L / 138,
    -236364091.0L / 2730,
    8553103.0L / 6,
    -23749461029.0L / 870,
    8615841276005.0L / 14322,
};

inline constexpr int max_em_order = 14;

/// B_{2j} / (2j)!
inline real bernoulli_over_factorial(int j) {
    return bernoulli_even[static_cast<std::size_t>(j - 1)] /
           std::tgamma(static_cast<real>(2 * j + 1));
}

/// (e^z (z - 1) + 1) / z^2, the kernel of the integral of t e^{u t}.
inline real log_integral_kernel(real z) {
    if (std::fabs(z) < 0.5L) {
        // sum_{n>=2} z^{n-2} (n-1)/n!
        real term_pow = 1;
        real fact = 2;
        real sum = 0;
        for (int n = 2; n < 40; ++n) {
            sum += term_pow * (n - 1) / fact;
            term_pow *= z;
            fact *= (n + 1);
        }
        return sum;
    }
    return (std::exp(z) * (z - 1) + 1) / (z * z);
}

/// The summand family x^{-s} (ln x)^p with p in {0, 1}.
class PowerLogTerm {
public:
    PowerLogTerm(real s, int log_power) : s_(s), log_power_(log_power) {}

    real s() const { return s_; }
    int log_power() const { return log_power_; }

    real operator()(real x) const {
        real base = std::pow(x, -s_);
        return log_power_ == 0 ? base : base * std::log(x);
    }

    real derivative(int order, real x) const {
        real poch = 1;
        real harmonic = 0;
        for (int i = 0; i < order; ++i) {
            poch *= s_ + i;
            harmonic += 1 / (s_ + i);
        }
        real sign = (order % 2 == 0) ? 1 : -1;
        real base = std::pow(x, -s_ - order);
        if (log_power_ == 0) return sign * poch * base;
        // d^j/dx^j of x^{-s} ln x = (-1)^j x^{-s-j} (s)_j (ln x - sum_{i<j} 1/(s+i))
        return sign * base * poch * (std::log(x) - harmonic);
    }

    /// Integral over [a, b]; b may be infinite when s > 1.
    real integral(real a, real b) const {
        const real u = 1 - s_;
        const real la = std::log(a);
        if (std::isinf(b)) {
            const real sm1 = s_ - 1;
            real head = std::exp(u * la) / sm1;
            return log_power_ == 0 ? head : head * (la + 1 / sm1);
        }
        const real lb = std::log(b);
        if (log_power_ == 0) {
            if (u == 0) return lb - la;
            return std::exp(u * la) * std::expm1(u * (lb - la)) / u;
        }
        // integral of t e^{u t} dt over [ln a, ln b]
        return lb * lb * log_integral_kernel(u * lb) - la * la * log_integral_kernel(u * la);
    }

    /// Upper bound on the integral of |f^{(order)}| over [a, inf), a >= 1.
    real abs_derivative_integral_bound(int order, real a) const {
        real poch = 1;
        real harmonic = 0;
        for (int i = 0; i < order; ++i) {
            poch *= s_ + i;
            harmonic += 1 / (s_ + i);
        }
        const real e = s_ + order - 1;  // exponent of the antiderivative
        const real head = poch * std::pow(a, -e);
        if (log_power_ == 0) return head / e;
        const real la = std::log(a);
        return head * (la / e + 1 / (e * e) + harmonic / e);
    }

private:
    real s_;
    int log_power_;
};

struct DirectSum {
    real value = 0;
    real abs_err = 0;
};

inline DirectSum direct_sum(const PowerLogTerm& f, std::uint64_t lo, std::uint64_t hi) {
    CompensatedSum<real> acc;
    real magnitude = 0;
    for (std::uint64_t k = lo; k <= hi; ++k) {
        real t = f(static_cast<real>(k));
        acc += t;
        magnitude += std::fabs(t);
    }
    real v = acc.value();
    return {v, 4 * ld_eps * magnitude + 2 * ld_eps * std::fabs(v)};
}

struct TailExpansion {
    real value = 0;
    real truncation = 0;
    real rounding = 0;
};

/// Euler-Maclaurin evaluation of sum_{k=a}^{b} f(k) with `order` Bernoulli
/// corrections; b may be infinite.
inline TailExpansion em_block(const PowerLogTerm& f, real a, real b, int order) {
    const bool open = std::isinf(b);
    CompensatedSum<real> acc;
    real magnitude = 0;
    auto add = [&](real t) {
        acc += t;
        magnitude += std::fabs(t);
    };
    add(f.integral(a, b));
    add(f(a) / 2);
    if (!open) add(f(b) / 2);
    for (int j = 1; j <= order; ++j) {
        const real c = bernoulli_over_factorial(j);
        const real db = open ? 0 : f.derivative(2 * j - 1, b);
        add(c * (db - f.derivative(2 * j - 1, a)));
    }

    real truncation;
    if (f.log_power() == 0) {
        // Completely monotone summand: the remainder is bounded by the first
        // omitted correction.
        const real c = std::fabs(bernoulli_over_factorial(order + 1));
        const real db = open ? 0 : f.derivative(2 * order + 1, b);
        truncation = c * std::fabs(db - f.derivative(2 * order + 1, a));
    } else {
        const real c = std::fabs(bernoulli_over_factorial(order));
        truncation = c * f.abs_derivative_integral_bound(2 * order, a);
    }
    real v = acc.value();
    return {v, truncation, 8 * ld_eps * magnitude + 2 * ld_eps * std::fabs(v)};
}

struct SumOptions {
    real target_abs_err;
    std::uint64_t max_terms;
    int order;
    std::uint64_t direct_limit;
};

/// sum_{k=lo}^{hi} f(k); hi == 0 denotes an infinite upper limit.
inline EvalResult power_log_sum(const PowerLogTerm& f, std::uint64_t lo, std::uint64_t hi,
                                const SumOptions& opt) {
    const bool open = hi == 0;
    if (!open && hi - lo + 1 <= opt.direct_limit) {
        auto d = direct_sum(f, lo, hi);
        return {d.value, d.abs_err};
    }
    const real b = open ? infinity : static_cast<real>(hi);
    std::uint64_t head = 16;
    TailExpansion tail;
    for (;;) {
        if (!open && head >= hi - lo) {
            auto d = direct_sum(f, lo, hi);
            return {d.value, d.abs_err};
        }
        tail = em_block(f, static_cast<real>(lo + head), b, opt.order);
        if (tail.truncation <= opt.target_abs_err / 4) break;
        if (head * 2 > opt.max_terms) {
            auto d = direct_sum(f, lo, lo + head - 1);
            EvalResult best{d.value + tail.value, d.abs_err + tail.truncation + tail.rounding};
            throw precision_error("Euler-Maclaurin remainder exceeds target within max_terms",
                                  best);
        }
        head *= 2;
    }
    auto d = direct_sum(f, lo, lo + head - 1);
    CompensatedSum<real> total(d.value);
    total += tail.value;
    return {total.value(), d.abs_err + tail.truncation + tail.rounding};
}

}  // namespace zetalab::detail

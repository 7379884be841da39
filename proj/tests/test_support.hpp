#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace zetalab::testing {

/// Parses a decimal reference value at long double precision.
inline long double ld(const char* text) { return std::stold(text); }

/// sum_{k=lo}^{hi} k^{-s} by plain summation from the small end upward.
inline long double brute_power_sum(std::uint64_t lo, std::uint64_t hi, long double s) {
    long double sum = 0;
    long double comp = 0;
    for (std::uint64_t k = hi; k >= lo; --k) {
        const long double y = std::pow(static_cast<long double>(k), -s) - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (k == lo) break;
    }
    return sum;
}

inline long double rel_diff(long double a, long double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace zetalab::testing

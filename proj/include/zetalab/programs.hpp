#pragma once

// Programs as bit-strings, their integer codes, the 2^{-|p|} program
// distribution and its zeta/Zipf sandwich.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetalab/core.hpp"
#include "zetalab/numerics.hpp"

namespace zetalab {

using BigUInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A finite bit-string, most significant bit first. Canonical programs
/// start with a 1 bit.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<bool> bits) : bits_(std::move(bits)) {}

    static Program from_string(std::string_view text) {
        std::vector<bool> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw domain_error("program strings contain only 0 and 1");
            bits.push_back(c == '1');
        }
        return Program(std::move(bits));
    }

    /// The low `length` bits of `code`, most significant first.
    static Program from_code(std::uint64_t code, int length) {
        std::vector<bool> bits(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = (code >> (length - 1 - i)) & 1U;
        return Program(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    bool is_canonical() const { return !bits_.empty() && bits_.front(); }
    const std::vector<bool>& bits() const { return bits_; }

    void push_back(bool bit) { bits_.push_back(bit); }
    void flip(std::size_t i) { bits_[i] = !bits_[i]; }
    void resize(std::size_t n) { bits_.resize(n); }

    Program& operator+=(const Program& rhs) {
        bits_.insert(bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
        return *this;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    friend bool operator==(const Program&, const Program&) = default;

private:
    std::vector<bool> bits_;
};

/// phi(p) = sum_i b_i 2^{|p| - i}.
inline BigUInt arithmetize(const Program& p) {
    detail::require(!p.empty(), "cannot arithmetize the empty program");
    BigUInt code = 0;
    for (bool b : p.bits()) {
        code <<= 1;
        if (b) code |= 1;
    }
    return code;
}

/// The canonical program whose code is `code`.
inline Program dearithmetize(const BigUInt& code) {
    detail::require(code >= 1, "program codes start at 1");
    const auto top = static_cast<std::size_t>(boost::multiprecision::msb(code));
    std::vector<bool> bits(top + 1);
    for (std::size_t i = 0; i <= top; ++i) bits[i] = boost::multiprecision::bit_test(code, top - i);
    return Program(std::move(bits));
}

/// Smallest integer c with 2^c >= x, for x >= 1.
inline std::size_t ceil_log2(const BigUInt& x) {
    if (x <= 1) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(BigUInt(x - 1))) + 1;
}

/// 2^{-|p|} for a canonical program.
inline Rational program_prob(const Program& p) {
    detail::require(p.is_canonical(), "program_prob requires a canonical (leading 1) program");
    BigUInt den = 1;
    den <<= p.size();
    return Rational(1, den);
}

struct SandwichBounds {
    Rational lower;  ///< 1 / (2 phi + 2)
    Rational upper;  ///< 1 / (phi + 1)
};

inline constexpr unsigned min_sandwich_code = 3;

inline SandwichBounds sandwich_bounds(const Program& p) {
    detail::require(p.is_canonical(), "sandwich_bounds requires a canonical program");
    BigUInt phi = arithmetize(p);
    detail::require(phi >= min_sandwich_code, "program codes below 3 are discarded");
    return {Rational(1, 2 * phi + 2), Rational(1, phi + 1)};
}

struct SandwichReport {
    int max_length = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    /// programs for which ceil(log2(phi + 1)) != |p|
    std::uint64_t length_identity_failures = 0;

    bool passed() const { return checked > 0 && violations == 0 && length_identity_failures == 0; }
};

inline constexpr int max_enumeration_length = 30;

/// Checks lower <= 2^{-|p|} <= upper in exact rationals for every canonical
/// program of length <= max_length with phi >= 3.
inline SandwichReport verify_sandwich(int max_length) {
    detail::require(max_length >= 2 && max_length <= max_enumeration_length,
                    "sandwich enumeration supports lengths 2..30");
    SandwichReport report;
    report.max_length = max_length;
    for (int len = 2; len <= max_length; ++len) {
        const std::uint64_t first = std::max<std::uint64_t>(min_sandwich_code, 1ULL << (len - 1));
        const std::uint64_t last = (1ULL << len) - 1;
        for (std::uint64_t code = first; code <= last; ++code) {
            Program p = Program::from_code(code, len);
            Rational prob = program_prob(p);
            SandwichBounds b = sandwich_bounds(p);
            ++report.checked;
            if (!(b.lower <= prob && prob <= b.upper)) ++report.violations;
            if (ceil_log2(BigUInt(code + 1)) != p.size()) ++report.length_identity_failures;
        }
    }
    return report;
}

/// Non-negative fraction with 64-bit parts, compared exactly.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator<(const Fraction& a, const Fraction& b) {
        using u128 = unsigned __int128;
        return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
    }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }

    Rational exact() const { return Rational(BigUInt(num), BigUInt(den)); }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ConvergenceRow {
    int length = 0;
    Fraction gap_upper_lower;  ///< max (phi+1)^{-1} - (2 phi + 2)^{-1}
    Fraction gap_p_lower;      ///< max 2^{-L} - (2 phi + 2)^{-1}
    Fraction gap_upper_p;      ///< max (phi+1)^{-1} - 2^{-L}
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    /// For each gap column: whether it strictly decreases over every listed
    /// length, and the first length from which it does.
    std::array<bool, 3> strictly_decreasing{};
    std::array<int, 3> decreasing_from{};
    bool bounded = false;  ///< every gap <= 2^{-L}

    bool passed() const {
        return bounded && std::all_of(strictly_decreasing.begin(), strictly_decreasing.end(),
                                      [](bool b) { return b; });
    }
};

inline constexpr std::array<const char*, 3> gap_column_names = {"gap_upper_lower", "gap_p_lower",
                                                                 "gap_upper_p"};

/// Exhaustive per-length maxima of the three power-law gaps.
inline ConvergenceReport verify_power_law_convergence(int max_length) {
    detail::require(max_length >= 2 && max_length <= max_enumeration_length,
                    "convergence enumeration supports lengths 2..30");
    ConvergenceReport report;
    for (int len = 2; len <= max_length; ++len) {
        const std::uint64_t pow_l = 1ULL << len;
        const std::uint64_t first = std::max<std::uint64_t>(min_sandwich_code, pow_l / 2);
        ConvergenceRow row{len, {0, 1}, {0, 1}, {0, 1}};
        for (std::uint64_t phi = first; phi < pow_l; ++phi) {
            const std::uint64_t lower_den = 2 * phi + 2;
            Fraction g1{1, lower_den};
            Fraction g2{lower_den - pow_l, pow_l * lower_den};
            Fraction g3{pow_l - phi - 1, pow_l * (phi + 1)};
            if (row.gap_upper_lower < g1) row.gap_upper_lower = g1;
            if (row.gap_p_lower < g2) row.gap_p_lower = g2;
            if (row.gap_upper_p < g3) row.gap_upper_p = g3;
        }
        report.rows.push_back(row);
    }

    auto column = [](const ConvergenceRow& r, std::size_t c) {
        return c == 0 ? r.gap_upper_lower : c == 1 ? r.gap_p_lower : r.gap_upper_p;
    };
    report.bounded = true;
    for (const auto& r : report.rows) {
        Fraction bound{1, 1ULL << r.length};
        for (std::size_t c = 0; c < 3; ++c) report.bounded = report.bounded && column(r, c) <= bound;
    }
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t start = report.rows.size() - 1;
        while (start > 0 && column(report.rows[start], c) < column(report.rows[start - 1], c)) --start;
        report.strictly_decreasing[c] = start == 0;
        report.decreasing_from[c] = report.rows[start].length;
    }
    return report;
}

namespace detail {

inline real log_of(const BigUInt& x) {
    const auto top = boost::multiprecision::msb(x);
    if (top < 60) return std::log(static_cast<real>(x.convert_to<std::uint64_t>()));
    const auto shift = top - 60;
    auto head = static_cast<std::uint64_t>(x >> shift);
    return std::log(static_cast<real>(head)) + static_cast<real>(shift) * std::numbers::ln2_v<real>;
}

}  // namespace detail

/// Zeta approximation of program probability, (phi+1)^{-(1+eps)} / zeta(1+eps).
/// Holds zeta(1+eps) so repeated evaluation is cheap.
class ZetaPrior {
public:
    explicit ZetaPrior(real eps, const PrecisionConfig& cfg = {})
        : eps_(eps), zeta_((detail::require(std::isfinite(eps) && eps > 0, "eps must be positive"),
                            riemann_zeta(1 + eps, cfg).value)) {}

    real eps() const { return eps_; }
    real normalizer() const { return zeta_; }

    real operator()(std::uint64_t code) const {
        return std::pow(static_cast<real>(code) + 1, -(1 + eps_)) / zeta_;
    }

    real operator()(const BigUInt& code) const {
        return std::exp(-(1 + eps_) * detail::log_of(code + 1)) / zeta_;
    }

private:
    real eps_;
    real zeta_;
};

inline real zeta_prior_term(const BigUInt& code, real eps, const PrecisionConfig& cfg = {}) {
    return ZetaPrior(eps, cfg)(code);
}

}  // namespace zetalab

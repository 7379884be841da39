#include <cstdint>
#include <string>

#include <gtest/gtest.h>

#include "zetalab/toymachine.hpp"

namespace {

using namespace zetalab;

ExecOutcome exec(const std::string& bits, MachineConfig cfg = {}) { return run(Program::from_string(bits), cfg); }

TEST(Machine, HaltCostsOneStep) {
    const ExecOutcome r = exec("111");
    EXPECT_EQ(r.status, ExecStatus::halted);
    EXPECT_TRUE(r.output.empty());
    EXPECT_EQ(r.steps, 1U);
}

TEST(Machine, EmitsInOrder) {
    EXPECT_EQ(exec("001111").output.to_string(), "1");
    EXPECT_EQ(exec("000001111").output.to_string(), "01");
    EXPECT_EQ(exec("000001111").steps, 3U);
}

TEST(Machine, IncompleteOpcodeIsInvalid) {
    EXPECT_EQ(exec("1").status, ExecStatus::invalid);
    EXPECT_EQ(exec("11").status, ExecStatus::invalid);
    EXPECT_EQ(exec("11").steps, 0U);
    EXPECT_THROW(run(Program()), domain_error);
}

TEST(Machine, TrailingBitsIgnored) {
    EXPECT_EQ(exec("00111111").output.to_string(), "1");
    EXPECT_EQ(exec("00111110").output.to_string(), "1");
}

TEST(Machine, InstructionStreamWraps) {
    const ExecOutcome r = exec("001", {10, 64});
    EXPECT_EQ(r.status, ExecStatus::fuel_exhausted);
    EXPECT_EQ(r.output.to_string(), std::string(10, '1'));
    EXPECT_EQ(r.steps, 10U);
}

TEST(Machine, SkipIfClear) {
    EXPECT_EQ(exec("110001000111").output.to_string(), "0");
    EXPECT_EQ(exec("100110001000111").output.to_string(), "10");
}

TEST(Machine, JumpBackWhenSet) {
    // flip; jump-back: the cell alternates, so control cycles without output
    const ExecOutcome r = exec("100101", {50, 64});
    EXPECT_EQ(r.status, ExecStatus::fuel_exhausted);
    EXPECT_TRUE(r.output.empty());
    // cell clear: jump-back falls through to emit-1 and halt
    EXPECT_EQ(exec("101001111").output.to_string(), "1");
}

TEST(Machine, TapeIsCircular) {
    // flip cell 0; move right; test the current cell
    const std::string prog = "100011110001000111";
    EXPECT_EQ(exec(prog, {256, 1}).output.to_string(), "10");
    EXPECT_EQ(exec(prog, {256, 2}).output.to_string(), "0");
    // moving left from cell 0 lands on the last cell
    const std::string left = "010100011011110001000111";
    EXPECT_EQ(exec(left, {256, 2}).output.to_string(), "10");
    EXPECT_EQ(exec(left, {256, 3}).output.to_string(), "0");
}

TEST(Machine, ConfigValidation) {
    EXPECT_THROW(exec("111", {0, 64}), domain_error);
    EXPECT_THROW(exec("111", {10, 0}), domain_error);
}

TEST(Machine, PrefixCheckAgreesWithRun) {
    const MachineConfig cfg{64, 8};
    const std::vector<Program> targets{Program(), Program::from_string("1"), Program::from_string("01"),
                                       Program::from_string("110")};
    for (int len = 1; len <= 12; ++len) {
        for (std::uint64_t code = 1ULL << (len - 1); code < (1ULL << len); ++code) {
            const std::string out = run(Program::from_code(code, len), cfg).output.to_string();
            for (const auto& t : targets) {
                const bool expected = out.rfind(t.to_string(), 0) == 0;
                ASSERT_EQ(output_has_prefix(code, len, t, cfg), expected) << code << " " << t.to_string();
            }
        }
    }
}

/// Exact mass, zeta mass and count by running every program through run().
struct BruteMass {
    Rational exact = 0;
    real zeta = 0;
    std::uint64_t matched = 0;
    Rational exact_only = 0;  // output equal to the target
};

BruteMass brute(const std::string& target, int max_length, real eps, const MachineConfig& cfg = {}) {
    BruteMass m;
    const real z = riemann_zeta(1 + eps).value;
    for (int len = 2; len <= max_length; ++len) {
        for (std::uint64_t code = std::max<std::uint64_t>(3, 1ULL << (len - 1)); code < (1ULL << len); ++code) {
            const std::string out = run(Program::from_code(code, len), cfg).output.to_string();
            if (out.rfind(target, 0) != 0) continue;
            const Rational w(1, BigUInt(1ULL << len));
            m.exact += w;
            m.zeta += std::pow(static_cast<real>(code + 1), -(1 + eps)) / z;
            ++m.matched;
            if (out == target) m.exact_only += w;
        }
    }
    return m;
}

TEST(TruncatedAlp, MatchesBruteForce) {
    for (const std::string target : {"", "1", "0", "10", "011"}) {
        const AlpReport r = truncated_alp(Program::from_string(target), 12, 0.01L);
        const BruteMass b = brute(target, 12, 0.01L);
        EXPECT_EQ(r.exact_mass, b.exact) << target;
        EXPECT_EQ(r.matched_count, b.matched) << target;
        EXPECT_NEAR(static_cast<double>(r.zeta_mass), static_cast<double>(b.zeta), 1e-15) << target;
        EXPECT_EQ(r.enumerated_count, (1ULL << 12) - 3);
        EXPECT_EQ(r.sandwich_violations, 0U);
    }
}

TEST(TruncatedAlp, Deterministic) {
    const AlpReport a = truncated_alp(Program::from_string("10"), 16, 0.01L);
    const AlpReport b = truncated_alp(Program::from_string("10"), 16, 0.01L);
    EXPECT_EQ(a.exact_mass, b.exact_mass);
    EXPECT_EQ(a.zeta_mass, b.zeta_mass);
}

TEST(TruncatedAlp, MonotoneInLength) {
    Rational prev = 0;
    for (int len = 4; len <= 16; len += 2) {
        const Rational m = truncated_alp(Program::from_string("1"), len, 0.01L).exact_mass;
        EXPECT_GE(m, prev);
        prev = m;
    }
}

TEST(TruncatedAlp, PrefixAdditivity) {
    const int L = 12;
    for (const std::string x : {"", "0", "1", "00", "01", "10", "11"}) {
        const Rational px = truncated_alp(Program::from_string(x), L, 0.01L).exact_mass;
        const Rational px0 = truncated_alp(Program::from_string(x + "0"), L, 0.01L).exact_mass;
        const Rational px1 = truncated_alp(Program::from_string(x + "1"), L, 0.01L).exact_mass;
        EXPECT_GE(px, px0 + px1) << x;
        EXPECT_EQ(px, px0 + px1 + brute(x, L, 0.01L).exact_only) << x;
    }
}

TEST(TruncatedAlp, ComplementSymmetry) {
    // emit-0 and emit-1 are interchangeable opcodes
    EXPECT_EQ(truncated_alp(Program::from_string("0"), 14, 0.01L).exact_mass,
              truncated_alp(Program::from_string("1"), 14, 0.01L).exact_mass);
}

TEST(TruncatedAlp, RejectsOutOfRangeArguments) {
    EXPECT_THROW(truncated_alp(Program(), 25, 0.01L), domain_error);
    EXPECT_THROW(truncated_alp(Program(), 1, 0.01L), domain_error);
    EXPECT_THROW(truncated_alp(Program(std::vector<bool>(17, true)), 10, 0.01L), domain_error);
    EXPECT_THROW(truncated_alp(Program(), 10, 0), domain_error);
}

}  // namespace

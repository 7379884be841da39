#pragma once

// A small reference machine for computing truncated algorithmic probability
// by exhaustive enumeration.
//
// Opcode table (3 bits, most significant first). This table is the machine's
// identity; changing it changes every mass computed against it.
//
//   000 emit-0                  append 0 to the output
//   001 emit-1                  append 1 to the output
//   010 move-left               head <- head - 1 (circular tape)
//   011 move-right              head <- head + 1 (circular tape)
//   100 flip-cell               tape[head] ^= 1
//   101 jump-back-if-cell-set   if tape[head]: continue at the previous instruction
//   110 skip-next-if-cell-clear if !tape[head]: skip the next instruction
//   111 halt
//
// The instruction stream is circular: control wraps from the last
// instruction to the first. Each executed instruction (halt included) costs
// one step of fuel. Trailing bits that do not fill an opcode are ignored; a
// program with no complete opcode has status `invalid` and empty output.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "zetalab/programs.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

enum class Opcode : std::uint8_t {
    emit0 = 0,
    emit1 = 1,
    move_left = 2,
    move_right = 3,
    flip = 4,
    jump_back_if_set = 5,
    skip_next_if_clear = 6,
    halt = 7,
};

struct MachineConfig {
    std::uint32_t fuel = 256;
    std::uint32_t tape_size = 64;

    void validate() const {
        detail::require(fuel >= 1, "fuel must be at least 1");
        detail::require(tape_size >= 1, "tape_size must be at least 1");
    }
};

enum class ExecStatus { halted, fuel_exhausted, invalid };

inline const char* to_string(ExecStatus s) {
    switch (s) {
        case ExecStatus::halted: return "halted";
        case ExecStatus::fuel_exhausted: return "fuel_exhausted";
        case ExecStatus::invalid: return "invalid";
    }
    return "?";
}

struct ExecOutcome {
    Program output;
    std::uint32_t steps = 0;
    ExecStatus status = ExecStatus::invalid;
};

namespace detail {

struct RunSummary {
    std::uint32_t steps = 0;
    ExecStatus status = ExecStatus::invalid;
};

/// Executes `ops`; `emit(bit)` returns false to stop early.
template <typename Emit>
RunSummary execute(const std::uint8_t* ops, std::size_t count, const MachineConfig& cfg,
                   Emit&& emit) {
    if (count == 0) return {0, ExecStatus::invalid};
    // tape_size is unbounded in principle; keep the common case on the stack
    std::vector<std::uint8_t> heap_tape;
    std::uint8_t stack_tape[256] = {};
    std::uint8_t* tape = stack_tape;
    if (cfg.tape_size > sizeof(stack_tape)) {
        heap_tape.assign(cfg.tape_size, 0);
        tape = heap_tape.data();
    }
    std::size_t head = 0;
    std::size_t pc = 0;
    std::uint32_t steps = 0;
    while (steps < cfg.fuel) {
        const auto op = static_cast<Opcode>(ops[pc]);
        ++steps;
        std::size_t next = pc + 1;
        switch (op) {
            case Opcode::emit0:
                if (!emit(false)) return {steps, ExecStatus::halted};
                break;
            case Opcode::emit1:
                if (!emit(true)) return {steps, ExecStatus::halted};
                break;
            case Opcode::move_left: head = (head + cfg.tape_size - 1) % cfg.tape_size; break;
            case Opcode::move_right: head = (head + 1) % cfg.tape_size; break;
            case Opcode::flip: tape[head] ^= 1U; break;
            case Opcode::jump_back_if_set:
                if (tape[head]) next = pc + count - 1;
                break;
            case Opcode::skip_next_if_clear:
                if (!tape[head]) next = pc + 2;
                break;
            case Opcode::halt: return {steps, ExecStatus::halted};
        }
        pc = next % count;
    }
    return {steps, ExecStatus::fuel_exhausted};
}

inline std::size_t decode_code(std::uint64_t code, int length, std::uint8_t* ops) {
    const int count = length / 3;
    for (int i = 0; i < count; ++i) ops[i] = static_cast<std::uint8_t>((code >> (length - 3 * (i + 1))) & 7U);
    return static_cast<std::size_t>(count);
}

}  // namespace detail

/// Runs `p` to halt or fuel exhaustion. Deterministic; every bit-string runs.
inline ExecOutcome run(const Program& p, const MachineConfig& cfg = {}) {
    detail::require(!p.empty(), "cannot run the empty program");
    cfg.validate();
    std::vector<std::uint8_t> ops(p.size() / 3);
    for (std::size_t i = 0; i < ops.size(); ++i)
        ops[i] = static_cast<std::uint8_t>((p[3 * i] << 2) | (p[3 * i + 1] << 1) | p[3 * i + 2]);
    ExecOutcome out;
    auto summary = detail::execute(ops.data(), ops.size(), cfg, [&](bool bit) {
        out.output.push_back(bit);
        return true;
    });
    out.steps = summary.steps;
    out.status = summary.status;
    return out;
}

/// Whether the output of the program with the given code starts with `target`.
inline bool output_has_prefix(std::uint64_t code, int length, const Program& target,
                              const MachineConfig& cfg) {
    if (target.empty()) return true;
    std::uint8_t ops[64];
    const std::size_t count = detail::decode_code(code, length, ops);
    std::size_t pos = 0;
    bool mismatch = false;
    detail::execute(ops, count, cfg, [&](bool bit) {
        if (bit != target[pos]) {
            mismatch = true;
            return false;
        }
        return ++pos < target.size();
    });
    return !mismatch && pos == target.size();
}

struct AlpReport {
    Program target;
    int max_length = 0;
    real eps = 0;
    MachineConfig machine;
    Rational exact_mass;  ///< sum of 2^{-|p|} over matching programs
    real zeta_mass = 0;   ///< sum of zeta prior terms over the same programs
    std::uint64_t matched_count = 0;
    std::uint64_t enumerated_count = 0;
    std::uint64_t sandwich_violations = 0;
    real ratio = 0;  ///< zeta_mass / exact_mass, 0 when nothing matched
};

inline constexpr int max_alp_length = 24;
inline constexpr std::size_t max_alp_target = 16;

/// Exact truncated algorithmic probability of `target` against its zeta
/// approximation over all canonical programs with 3 <= phi < 2^max_length.
inline AlpReport truncated_alp(const Program& target, int max_length, real eps,
                               const MachineConfig& cfg = {}, const PrecisionConfig& pcfg = {}) {
    detail::require(max_length >= 2 && max_length <= max_alp_length,
                    "truncated_alp supports max_length in 2..24");
    detail::require(target.size() <= max_alp_target, "target length must be at most 16");
    cfg.validate();
    const ZetaPrior prior(eps, pcfg);

    const std::uint64_t first = min_sandwich_code;
    const std::uint64_t end = 1ULL << max_length;
    // Fixed chunking keeps the floating-point merge order independent of the
    // number of worker threads.
    constexpr std::size_t chunks = 64;
    struct Partial {
        std::uint64_t exact_num = 0;  // in units of 2^{-max_length}
        CompensatedSum<real> zeta;
        std::uint64_t matched = 0;
        std::uint64_t enumerated = 0;
        std::uint64_t violations = 0;
    };
    std::vector<Partial> partials(chunks);
    const std::uint64_t span = (end - first + chunks - 1) / chunks;

    auto work = [&](std::size_t c) {
        Partial& part = partials[c];
        const std::uint64_t lo = first + c * span;
        const std::uint64_t hi = std::min(end, lo + span);
        for (std::uint64_t code = lo; code < hi; ++code) {
            const int len = std::bit_width(code);
            ++part.enumerated;
            if (!output_has_prefix(code, len, target, cfg)) continue;
            ++part.matched;
            part.exact_num += 1ULL << (max_length - len);
            part.zeta += prior(code);
            const std::uint64_t pow_l = 1ULL << len;
            if (!(pow_l <= 2 * code + 2 && code + 1 <= pow_l)) ++part.violations;
        }
    };

    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t c; (c = next.fetch_add(1)) < chunks;) work(c);
            });
    }

    AlpReport report;
    report.target = target;
    report.max_length = max_length;
    report.eps = eps;
    report.machine = cfg;
    std::uint64_t exact_num = 0;
    CompensatedSum<real> zeta;
    for (const auto& p : partials) {
        exact_num += p.exact_num;
        zeta += p.zeta.value();
        report.matched_count += p.matched;
        report.enumerated_count += p.enumerated;
        report.sandwich_violations += p.violations;
    }
    BigUInt den = 1;
    den <<= max_length;
    report.exact_mass = Rational(BigUInt(exact_num), den);
    report.zeta_mass = zeta.value();
    if (exact_num > 0)
        report.ratio = report.zeta_mass / (static_cast<real>(exact_num) / static_cast<real>(end));
    return report;
}

}  // namespace zetalab

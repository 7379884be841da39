#pragma once

// Training-sequence process models, their analytic entropy rates, and
// empirical estimators (plug-in entropy of the per-step draws and an LZ78
// codelength proxy for average Kolmogorov complexity).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "zetalab/core.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/programs.hpp"
#include "zetalab/random.hpp"
#include "zetalab/samplers.hpp"

namespace zetalab {

/// i.i.d. uniform m-bit programs.
struct RandomTyping {
    std::size_t m = 8;
};

/// i.i.d. zeta draws mapped to canonical programs.
struct IIDZeta {
    real s = 2;
};

inline constexpr int max_subprogram_bits = 24;

/// Programs made of m sub-programs drawn i.i.d. from Z_s^{(2^k)} over a
/// database of 2^k k-bit entries.
struct SubprogramZipf {
    int k = 4;
    std::size_t m = 8;
    std::uint64_t n = 1024;  ///< sequence length parameter of the entropy formula
    real s = 1.1L;
    std::vector<Program> database;

    /// Entry i is the k-bit binary expansion of i.
    static std::vector<Program> default_database(int k) {
        detail::require(k >= 1 && k <= max_subprogram_bits, "sub-program width k must be in 1..24");
        std::vector<Program> db;
        db.reserve(std::size_t{1} << k);
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) db.push_back(Program::from_code(i, k));
        return db;
    }
};

enum class MutationKind { append0, append1, flip, delete_last, duplicate_tail, truncate };

inline const char* to_string(MutationKind k) {
    switch (k) {
        case MutationKind::append0: return "append-0";
        case MutationKind::append1: return "append-1";
        case MutationKind::flip: return "flip";
        case MutationKind::delete_last: return "delete-last";
        case MutationKind::duplicate_tail: return "duplicate-tail";
        case MutationKind::truncate: return "truncate";
    }
    return "?";
}

struct Mutation {
    MutationKind kind;
    BigUInt operand;
};

/// Decodes z >= 1 as kind = (z-1) mod 6, operand = (z-1) div 6.
///
///   append-0 / append-1      always valid; operand ignored
///   flip                     flips bit `operand`; valid if operand < |p|
///   delete-last              valid if |p| >= 1; operand ignored
///   duplicate-tail           appends a copy of the last operand+1 bits;
///                            valid if operand+1 <= min(|p|, max_edit_width)
///   truncate                 keeps the first `operand` bits; valid if
///                            operand < |p| and |p| - operand <= max_edit_width
struct MutationCatalog {
    std::size_t max_edit_width = 16;

    static constexpr int kinds = 6;

    Mutation decode(const BigUInt& z) const {
        detail::require(z >= 1, "mutation codes start at 1");
        BigUInt q = (z - 1) / kinds;
        auto r = static_cast<int>(((z - 1) % kinds).convert_to<unsigned>());
        return {static_cast<MutationKind>(r), q};
    }

    bool is_valid(const Program& p, const Mutation& mut) const {
        const BigUInt size(p.size());
        switch (mut.kind) {
            case MutationKind::append0:
            case MutationKind::append1: return true;
            case MutationKind::flip: return mut.operand < size;
            case MutationKind::delete_last: return !p.empty();
            case MutationKind::duplicate_tail:
                return mut.operand + 1 <= size && mut.operand + 1 <= max_edit_width;
            case MutationKind::truncate:
                return mut.operand < size && size - mut.operand <= max_edit_width;
        }
        return false;
    }
};

/// Applies the transformation z decodes to, or returns p unchanged when it is
/// not valid for p.
inline Program mutate(const Program& p, const BigUInt& z, const MutationCatalog& catalog) {
    const Mutation mut = catalog.decode(z);
    if (!catalog.is_valid(p, mut)) return p;
    Program out = p;
    switch (mut.kind) {
        case MutationKind::append0: out.push_back(false); break;
        case MutationKind::append1: out.push_back(true); break;
        case MutationKind::flip: out.flip(mut.operand.convert_to<std::size_t>()); break;
        case MutationKind::delete_last: out.resize(out.size() - 1); break;
        case MutationKind::duplicate_tail: {
            const auto width = mut.operand.convert_to<std::size_t>() + 1;
            for (std::size_t i = p.size() - width; i < p.size(); ++i) out.push_back(p[i]);
            break;
        }
        case MutationKind::truncate: out.resize(mut.operand.convert_to<std::size_t>()); break;
    }
    return out;
}

/// Cumulative zeta-sampled mutation chain starting from the empty program.
struct EvolutionaryZeta {
    real s = 2;
    MutationCatalog catalog;
};

using ProcessModel = std::variant<RandomTyping, IIDZeta, SubprogramZipf, EvolutionaryZeta>;

inline std::string model_name(const ProcessModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RandomTyping>) return "random-typing";
            else if constexpr (std::is_same_v<T, IIDZeta>) return "iid-zeta";
            else if constexpr (std::is_same_v<T, SubprogramZipf>) return "subprogram";
            else return "evolutionary";
        },
        model);
}

inline void validate(const ProcessModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RandomTyping>) {
                detail::require(m.m >= 1, "random typing requires m >= 1");
            } else if constexpr (std::is_same_v<T, IIDZeta>) {
                detail::require(std::isfinite(m.s) && m.s > 1, "i.i.d. zeta requires s > 1");
            } else if constexpr (std::is_same_v<T, SubprogramZipf>) {
                detail::require(m.k >= 1 && m.k <= max_subprogram_bits, "sub-program width k must be in 1..24");
                detail::require(m.m >= 1, "sub-program count m must be at least 1");
                detail::require(m.n >= 2, "sequence length parameter n must be at least 2");
                detail::require(std::isfinite(m.s) && m.s >= 1, "sub-program Zipf requires s >= 1");
                detail::require(m.database.size() == (std::size_t{1} << m.k),
                                "database must hold exactly 2^k entries");
                for (const auto& entry : m.database)
                    detail::require(entry.size() == static_cast<std::size_t>(m.k),
                                    "database entries must be k bits long");
            } else {
                detail::require(std::isfinite(m.s) && m.s > 1, "evolutionary zeta requires s > 1");
                detail::require(m.catalog.max_edit_width >= 1, "max_edit_width must be at least 1");
            }
        },
        model);
}

/// Which programs a generated sequence keeps in memory.
enum class Retention {
    all,         ///< every program
    final_only,  ///< only the last one; earlier programs are replayed from draws
};

/// Generated programs plus the raw per-step draws that produced them.
///
/// One draw per step: the m-bit value for random typing, the zeta variate
/// for i.i.d. zeta, the sub-program indices packed base 2^k (first
/// sub-program least significant, indices zero-based) for sub-program Zipf,
/// and the mutation code for steps 2..n of the evolutionary chain.
struct TrainingSequence {
    ProcessModel model;
    std::uint64_t seed = 0;
    std::size_t length = 0;
    std::vector<Program> programs;
    std::vector<BigUInt> draws;

    bool complete() const { return programs.size() == length; }
};

/// Reproducible from (model, n, seed).
inline TrainingSequence generate(const ProcessModel& model, std::size_t n, std::uint64_t seed,
                                 Retention retention = Retention::all) {
    detail::require(n >= 1, "sequence length must be at least 1");
    validate(model);
    TrainingSequence seq{model, seed, n, {}, {}};
    RandomStream rng(seed);
    const bool keep = retention == Retention::all;
    if (keep) seq.programs.reserve(n);
    seq.draws.reserve(n);

    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RandomTyping>) {
                for (std::size_t i = 0; i < n; ++i) {
                    Program p = sample_uniform_program(m.m, rng);
                    BigUInt v = 0;
                    for (bool b : p.bits()) v = (v << 1) | static_cast<unsigned>(b);
                    seq.draws.push_back(std::move(v));
                    if (keep || i + 1 == n) seq.programs.push_back(std::move(p));
                }
            } else if constexpr (std::is_same_v<T, IIDZeta>) {
                const ZetaSampler zeta(m.s);
                for (std::size_t i = 0; i < n; ++i) {
                    BigUInt z = zeta(rng);
                    if (keep || i + 1 == n) seq.programs.push_back(dearithmetize(z));
                    seq.draws.push_back(std::move(z));
                }
            } else if constexpr (std::is_same_v<T, SubprogramZipf>) {
                const ZipfSampler zipf(std::uint64_t{1} << m.k, m.s);
                for (std::size_t i = 0; i < n; ++i) {
                    Program p;
                    BigUInt packed = 0;
                    for (std::size_t j = 0; j < m.m; ++j) {
                        const std::uint64_t idx = zipf(rng) - 1;
                        p += m.database[idx];
                        packed |= BigUInt(idx) << (static_cast<unsigned>(m.k) * j);
                    }
                    seq.draws.push_back(std::move(packed));
                    if (keep || i + 1 == n) seq.programs.push_back(std::move(p));
                }
            } else {
                const ZetaSampler zeta(m.s);
                Program current;  // the chain starts from the empty program
                if (keep || n == 1) seq.programs.push_back(current);
                for (std::size_t i = 1; i < n; ++i) {
                    BigUInt z = zeta(rng);
                    current = mutate(current, z, m.catalog);
                    seq.draws.push_back(std::move(z));
                    if (keep || i + 1 == n) seq.programs.push_back(current);
                }
            }
        },
        model);
    return seq;
}

/// Visits programs 1..n in order, replaying the evolutionary chain from its
/// draws when the sequence did not retain every program.
inline void for_each_program(const TrainingSequence& seq,
                             const std::function<void(const Program&)>& visit) {
    if (seq.complete()) {
        for (const auto& p : seq.programs) visit(p);
        return;
    }
    const auto* evo = std::get_if<EvolutionaryZeta>(&seq.model);
    detail::require(evo != nullptr, "only evolutionary sequences can be replayed from draws");
    Program current;
    visit(current);
    for (const auto& z : seq.draws) {
        current = mutate(current, z, evo->catalog);
        visit(current);
    }
}

/// Closed-form entropy rate in bits per problem.
struct AnalyticRate {
    real bits = 0;
    bool approximate = false;
    std::vector<Component> breakdown;
};

/// Significant terms of the sub-program Zipf entropy (bits unless labelled).
struct SubprogramEntropy {
    real database_bits = 0;    ///< k 2^k
    real log2_k = 0;
    real log2_n = 0;
    real log2_m = 0;
    real zipf_bits = 0;        ///< H(Z_s^{(2^k)}) in bits
    real zipf_nats = 0;        ///< the same entropy in nats, as the rate formula writes it
    real total_bits = 0;       ///< sum of the five terms above in bits
    real rate_bits = 0;        ///< total_bits / n
    real rate_as_written = 0;  ///< mixed-unit bracket (Zipf term in nats) / n
};

inline SubprogramEntropy subprogram_entropy(int k, std::uint64_t m, std::uint64_t n, real s,
                                            const PrecisionConfig& cfg = {}) {
    detail::require(k >= 1, "k must be at least 1");
    detail::require(k <= max_subprogram_bits, "k above 24 makes the database term explode");
    detail::require(m >= 1, "m must be at least 1");
    detail::require(n >= 2, "n must be at least 2");
    detail::require(std::isfinite(s) && s >= 1, "s must be at least 1");
    SubprogramEntropy e;
    const auto entries = static_cast<std::int64_t>(std::int64_t{1} << k);
    e.database_bits = static_cast<real>(k) * static_cast<real>(entries);
    e.log2_k = std::log2(static_cast<real>(k));
    e.log2_n = std::log2(static_cast<real>(n));
    e.log2_m = std::log2(static_cast<real>(m));
    e.zipf_nats = zipf_entropy(entries, s, LogBase::nats, cfg).value;
    e.zipf_bits = e.zipf_nats / std::numbers::ln2_v<real>;
    e.total_bits = e.log2_k + e.database_bits + e.log2_n + e.log2_m + e.zipf_bits;
    e.rate_bits = e.total_bits / static_cast<real>(n);
    e.rate_as_written =
        (e.database_bits + e.zipf_nats + e.log2_k + e.log2_n + e.log2_m) / static_cast<real>(n);
    return e;
}

inline AnalyticRate analytic_entropy_rate(const ProcessModel& model, const PrecisionConfig& cfg = {}) {
    validate(model);
    return std::visit(
        [&](const auto& m) -> AnalyticRate {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RandomTyping>) {
                const auto bits = static_cast<real>(m.m);
                return {bits, false, {{"m", bits}}};
            } else if constexpr (std::is_same_v<T, SubprogramZipf>) {
                const auto e = subprogram_entropy(m.k, m.m, m.n, m.s, cfg);
                return {e.rate_bits,
                        true,
                        {{"database_bits", e.database_bits},
                         {"zipf_bits", e.zipf_bits},
                         {"zipf_nats", e.zipf_nats},
                         {"log2_k", e.log2_k},
                         {"log2_n", e.log2_n},
                         {"log2_m", e.log2_m},
                         {"total_bits", e.total_bits},
                         {"rate_as_written", e.rate_as_written}}};
            } else {
                // i.i.d. zeta, and the limit of the evolutionary chain
                const real h = zeta_entropy(m.s, LogBase::bits, cfg).value;
                return {h, false, {{"zeta_entropy_bits", h}}};
            }
        },
        model);
}

enum class EstimatorMethod { plug_in, lz_codelength };

inline const char* to_string(EstimatorMethod m) {
    return m == EstimatorMethod::plug_in ? "plug-in" : "lz-codelength";
}

struct EntropyEstimate {
    real value = 0;      ///< bits per problem
    real std_error = 0;  ///< sampling standard error (plug-in only)
    real bias = 0;       ///< Miller-Madow bias estimate (K - 1) / (2 n ln 2), not applied
    std::size_t n_samples = 0;
    EstimatorMethod method = EstimatorMethod::plug_in;
};

inline constexpr std::size_t min_plugin_samples = 100;
inline constexpr std::size_t min_lz_samples = 1000;

namespace detail {

struct BigUIntHash {
    std::size_t operator()(const BigUInt& x) const { return boost::multiprecision::hash_value(x); }
};

inline EntropyEstimate plug_in_entropy(const std::vector<BigUInt>& symbols) {
    std::unordered_map<BigUInt, std::uint64_t, BigUIntHash> counts;
    for (const auto& x : symbols) ++counts[x];
    const auto n = static_cast<real>(symbols.size());
    EntropyEstimate est;
    est.n_samples = symbols.size();
    if (counts.size() <= 1) return est;
    real h = 0;
    real second = 0;
    for (const auto& [sym, c] : counts) {
        const real p = static_cast<real>(c) / n;
        const real info = -std::log2(p);
        h += p * info;
        second += p * info * info;
    }
    est.value = h;
    est.std_error = std::sqrt(std::max<real>(0, second - h * h) / n);
    est.bias = static_cast<real>(counts.size() - 1) / (2 * n * std::numbers::ln2_v<real>);
    return est;
}

}  // namespace detail

/// Plug-in entropy of the per-step draws, in bits per problem. For the
/// evolutionary chain this estimates the conditional rate.
inline EntropyEstimate empirical_entropy_rate(const TrainingSequence& seq) {
    detail::require(seq.length >= min_plugin_samples, "plug-in estimation needs at least 100 problems");
    return detail::plug_in_entropy(seq.draws);
}

/// Plug-in mutual information between consecutive draws, in bits, minus the
/// same estimate over a seeded random re-pairing (which removes the
/// small-sample bias shared by both).
inline real consecutive_mutual_information(const TrainingSequence& seq, std::uint64_t seed = 1) {
    const auto& d = seq.draws;
    detail::require(d.size() >= min_plugin_samples, "mutual information needs at least 100 draws");
    auto mi = [&](const std::vector<std::size_t>& partner) {
        std::vector<BigUInt> xs, ys, joint;
        const std::size_t pairs = d.size() - 1;
        xs.reserve(pairs);
        ys.reserve(pairs);
        joint.reserve(pairs);
        unsigned width = 1;
        for (const auto& v : d) width = std::max<unsigned>(width, v == 0 ? 1 : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1);
        for (std::size_t i = 0; i < pairs; ++i) {
            xs.push_back(d[i]);
            ys.push_back(d[partner[i]]);
            joint.push_back((d[i] << width) | d[partner[i]]);
        }
        return detail::plug_in_entropy(xs).value + detail::plug_in_entropy(ys).value -
               detail::plug_in_entropy(joint).value;
    };
    const std::size_t pairs = d.size() - 1;
    std::vector<std::size_t> next(pairs);
    for (std::size_t i = 0; i < pairs; ++i) next[i] = i + 1;
    std::vector<std::size_t> shuffled = next;
    RandomStream rng(seed);
    for (std::size_t i = pairs; i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.next_u64() % i]);
    return mi(next) - mi(shuffled);
}

/// Elias gamma code of x >= 1.
inline void append_elias_gamma(std::vector<bool>& out, const BigUInt& x) {
    const auto top = static_cast<std::size_t>(boost::multiprecision::msb(x));
    out.insert(out.end(), top, false);
    for (std::size_t i = 0; i <= top; ++i) out.push_back(boost::multiprecision::bit_test(x, top - i));
}

/// Self-delimiting bit serialization of the program sequence: raw bits for
/// the fixed-length models, the Elias gamma code of phi for i.i.d. zeta,
/// and gamma(|p| + 1) followed by p otherwise.
inline std::vector<bool> serialize_bits(const TrainingSequence& seq) {
    std::vector<bool> out;
    const bool fixed = std::holds_alternative<RandomTyping>(seq.model) ||
                       std::holds_alternative<SubprogramZipf>(seq.model);
    const bool zeta = std::holds_alternative<IIDZeta>(seq.model);
    for_each_program(seq, [&](const Program& p) {
        if (fixed) {
            out.insert(out.end(), p.bits().begin(), p.bits().end());
        } else if (zeta) {
            out.insert(out.end(), p.size() - 1, false);
            out.insert(out.end(), p.bits().begin(), p.bits().end());
        } else {
            append_elias_gamma(out, BigUInt(p.size() + 1));
            out.insert(out.end(), p.bits().begin(), p.bits().end());
        }
    });
    return out;
}

/// Ideal codelength in bits of an LZ78 parse of `bits`: each phrase costs
/// log2(dictionary size) for its parent index plus one bit for its last
/// symbol; a trailing partial phrase costs its index only.
inline real lz78_codelength(const std::vector<bool>& bits) {
    std::vector<std::array<std::uint32_t, 2>> trie(1, {0, 0});
    trie.reserve(bits.size() / 8 + 16);
    real total = 0;
    std::uint32_t node = 0;
    bool pending = false;
    for (bool b : bits) {
        const std::uint32_t child = trie[node][b];
        if (child != 0) {
            node = child;
            pending = true;
            continue;
        }
        total += std::log2(static_cast<real>(trie.size())) + 1;
        trie[node][b] = static_cast<std::uint32_t>(trie.size());
        trie.push_back({0, 0});
        node = 0;
        pending = false;
    }
    if (pending) total += std::log2(static_cast<real>(trie.size()));
    return total;
}

/// LZ78 codelength of the serialized sequence, in bits per problem; a
/// computable upper proxy for K(X_1..X_n) / n.
inline EntropyEstimate lz_codelength_rate(const TrainingSequence& seq) {
    detail::require(seq.length >= min_lz_samples, "LZ codelength estimation needs at least 1000 problems");
    EntropyEstimate est;
    est.method = EstimatorMethod::lz_codelength;
    est.n_samples = seq.length;
    est.value = lz78_codelength(serialize_bits(seq)) / static_cast<real>(seq.length);
    return est;
}

}  // namespace zetalab

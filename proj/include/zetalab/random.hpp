#pragma once

// Counter-based random stream built on Philox4x32-10 (Salmon et al.,
// Random123). The output for (seed, stream, counter) is fixed on every
// platform: block b = counter / 2 is the Philox image of the 128-bit counter
// (b_lo, b_hi, stream_lo, stream_hi) under key (seed_lo, seed_hi), and the
// 64-bit draw is words (1, 0) for even counters and (3, 2) for odd ones.

#include <array>
#include <cstdint>

namespace zetalab {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxBlock philox4x32_10(PhiloxBlock ctr, PhiloxKey key) {
    constexpr std::uint32_t m0 = 0xD2511F53U;
    constexpr std::uint32_t m1 = 0xCD9E8D57U;
    constexpr std::uint32_t w0 = 0x9E3779B9U;
    constexpr std::uint32_t w1 = 0xBB67AE85U;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += w0;
            key[1] += w1;
        }
        const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

/// Reproducible stream of 64-bit draws identified by (seed, stream id).
/// Value type: copying a stream forks an identical future.
class RandomStream {
public:
    static constexpr std::uint64_t default_seed = 20140801;

    explicit RandomStream(std::uint64_t seed = default_seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    /// Number of 64-bit draws consumed so far.
    std::uint64_t counter() const { return counter_; }

    /// Independent stream sharing this seed.
    RandomStream split(std::uint64_t stream) const { return RandomStream(seed_, stream); }

    void discard(std::uint64_t n) { counter_ += n; }

    std::uint64_t next_u64() {
        const std::uint64_t block = counter_ >> 1;
        if (!cached_ || cached_block_ != block) {
            words_ = philox4x32_10({static_cast<std::uint32_t>(block),
                                    static_cast<std::uint32_t>(block >> 32),
                                    static_cast<std::uint32_t>(stream_),
                                    static_cast<std::uint32_t>(stream_ >> 32)},
                                   {static_cast<std::uint32_t>(seed_),
                                    static_cast<std::uint32_t>(seed_ >> 32)});
            cached_block_ = block;
            cached_ = true;
        }
        const std::size_t half = (counter_ & 1U) * 2;
        ++counter_;
        return (static_cast<std::uint64_t>(words_[half + 1]) << 32) | words_[half];
    }

    /// Uniform double in the open interval (0, 1).
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53; }

    friend bool operator==(const RandomStream& a, const RandomStream& b) {
        return a.seed_ == b.seed_ && a.stream_ == b.stream_ && a.counter_ == b.counter_;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::uint64_t cached_block_ = 0;
    bool cached_ = false;
    PhiloxBlock words_{};
};

}  // namespace zetalab

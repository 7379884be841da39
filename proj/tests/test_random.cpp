#include <cmath>
#include <cstdint>
#include <set>

#include <gtest/gtest.h>

#include "zetalab/random.hpp"

namespace {

using namespace zetalab;

// Known-answer vectors of the reference Philox4x32-10 implementation.
TEST(Philox, KnownAnswers) {
    EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
              (PhiloxBlock{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (PhiloxBlock{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (PhiloxBlock{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RandomStream, FirstDrawsComeFromBlockZero) {
    RandomStream rng(0, 0);
    EXPECT_EQ(rng.next_u64(), 0xe169c58d6627e8d5ULL);
    EXPECT_EQ(rng.next_u64(), 0x9b00dbd8bc57ac4cULL);
    EXPECT_EQ(rng.counter(), 2U);
}

TEST(RandomStream, Reproducible) {
    RandomStream a(42, 3), b(42, 3);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
    EXPECT_TRUE(a == b);
}

TEST(RandomStream, CopyForksIdenticalFuture) {
    RandomStream a(7);
    a.next_u64();
    RandomStream b = a;
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomStream, DiscardSkipsDraws) {
    RandomStream a(9), b(9);
    for (int i = 0; i < 5; ++i) a.next_u64();
    b.discard(5);
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomStream, StreamsAndSeedsDiffer) {
    std::set<std::uint64_t> firsts;
    for (std::uint64_t s = 0; s < 8; ++s) {
        firsts.insert(RandomStream(1, s).next_u64());
        firsts.insert(RandomStream(s + 100, 0).next_u64());
    }
    EXPECT_EQ(firsts.size(), 16U);
    RandomStream base(5);
    RandomStream child = base.split(9);
    EXPECT_EQ(child.seed(), 5U);
    EXPECT_EQ(child.stream(), 9U);
    EXPECT_EQ(child.next_u64(), RandomStream(5, 9).next_u64());
}

TEST(RandomStream, UniformInOpenInterval) {
    RandomStream rng;
    double sum = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    // mean of U(0,1): standard error 1/sqrt(12 n)
    EXPECT_NEAR(sum / n, 0.5, 5 / std::sqrt(12.0 * n));
}

TEST(RandomStream, DefaultSeedIsFixed) { EXPECT_EQ(RandomStream().seed(), 20140801U); }

}  // namespace

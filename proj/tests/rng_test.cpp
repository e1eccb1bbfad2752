#include "csucb/rng.hpp"

#include <gtest/gtest.h>

#include <set>

namespace csucb {
namespace {

TEST(Rng, StreamMatchesCounterAccess) {
    RandomStream stream(123456789ULL);
    for (std::uint64_t i = 0; i < 100; ++i) {
        EXPECT_EQ(stream.next_u64(), splitmix_at(123456789ULL, i));
    }
}

TEST(Rng, UnitValuesStayInRange) {
    RandomStream stream(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = stream.next_unit();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, RunSeedsAreDistinct) {
    std::set<std::uint64_t> seeds;
    for (int run = 0; run < 1000; ++run) {
        seeds.insert(run_seed(42, static_cast<std::uint64_t>(run)));
    }
    EXPECT_EQ(seeds.size(), 1000u);
}

TEST(Rng, SubstreamsDiffer) {
    const std::uint64_t seed = run_seed(42, 0);
    EXPECT_NE(substream(seed, 1), substream(seed, 2));
    EXPECT_NE(splitmix_at(substream(seed, 1), 0), splitmix_at(substream(seed, 2), 0));
}

TEST(Rng, UniformRangeAndBernoulli) {
    RandomStream stream(99);
    long hits = 0;
    for (int i = 0; i < 10000; ++i) {
        const double x = stream.next_uniform(0.4, 0.9);
        EXPECT_GE(x, 0.4);
        EXPECT_LT(x, 0.9);
        if (stream.next_bernoulli(0.25)) ++hits;
    }
    // 3-sigma band around 2500 for Binomial(10^4, 0.25).
    EXPECT_NEAR(hits, 2500, 130);
}

}  // namespace
}  // namespace csucb

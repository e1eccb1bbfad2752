#include "csucb/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "csucb/errors.hpp"
#include "csucb/rng.hpp"

namespace csucb {
namespace {

TEST(BruteForceOracle, FindsTopKOptimum) {
    const auto model = topk_reward(TopKParams{2}, 3);
    const std::vector<double> weights{0.9, 0.5, 0.7};
    EXPECT_EQ(brute_force_oracle({0, 1, 2}, weights, model), SuperArm::of({0, 2}, 3));
}

TEST(BruteForceOracle, FindsUtilOptimum) {
    const UtilParams params{{1.0, 1.0}, {0.3, 0.6}};
    const auto model = util_reward(params);
    const std::vector<double> weights{0.5, 0.5};
    const auto best = brute_force_oracle({0, 1}, weights, model);
    EXPECT_EQ(best, SuperArm::of({0}, 2));
    EXPECT_NEAR(model.evaluate(best, weights), 0.2, 1e-15);
}

TEST(BruteForceOracle, SingletonAvailability) {
    const auto model = topk_reward(TopKParams{1}, 6);
    const std::vector<double> weights{0.1, 0.1, 0.1, 0.1, 0.9, 0.1};
    EXPECT_EQ(brute_force_oracle({4}, weights, model), SuperArm::of({4}, 6));
}

TEST(BruteForceOracle, TieBreaksBySizeThenLex) {
    // All weights equal: every singleton ties; {0} wins by cardinality + lex.
    const auto model = util_reward(UtilParams{{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}});
    const std::vector<double> weights{0.0, 0.0, 0.0};
    EXPECT_EQ(brute_force_oracle({0, 1, 2}, weights, model), SuperArm::of({0}, 3));
}

TEST(BruteForceOracle, EnforcesEnumerationCap) {
    const auto model = topk_reward(TopKParams{2}, 21);
    std::vector<int> available(21);
    std::vector<double> weights(21, 0.5);
    for (int i = 0; i < 21; ++i) available[i] = i;
    EXPECT_THROW(brute_force_oracle(available, weights, model), BudgetError);
    EXPECT_THROW(brute_force_oracle({}, weights, model), ValidationError);
}

TEST(TopKOracle, PicksLargestWeights) {
    const std::vector<double> weights{0.1, 0.8, 0.3, 0.9};
    EXPECT_EQ(topk_oracle({0, 1, 2, 3}, weights, 2), SuperArm::of({1, 3}, 4));
}

TEST(TopKOracle, TakesEverythingWhenKExceedsAvailability) {
    const std::vector<double> weights{0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.2};
    EXPECT_EQ(topk_oracle({2, 6}, weights, 5), SuperArm::of({2, 6}, 7));
}

TEST(TopKOracle, EqualWeightsTieBreakByIndex) {
    const std::vector<double> weights{0.5, 0.5};
    EXPECT_EQ(topk_oracle({0, 1}, weights, 1), SuperArm::of({0}, 2));
}

TEST(UtilOracle, SelectsPositiveUtilityArms) {
    const UtilParams params{{1.0, 1.0, 1.0}, {0.3, 0.6, 0.45}};
    const std::vector<double> weights{0.5, 0.5, 0.5};
    EXPECT_EQ(util_oracle({0, 1, 2}, weights, params), SuperArm::of({0, 2}, 3));
}

TEST(UtilOracle, FallsBackToLeastBadSingleton) {
    const UtilParams params{{1.0, 1.0}, {0.6, 0.7}};
    const std::vector<double> weights{0.5, 0.5};  // utilities -0.1, -0.2
    EXPECT_EQ(util_oracle({0, 1}, weights, params), SuperArm::of({0}, 2));
}

TEST(UtilOracle, BreakEvenArmIsExcluded) {
    const UtilParams params{{1.0, 1.0}, {0.5, 0.1}};
    const std::vector<double> weights{0.5, 0.5};  // utility of arm 0 is exactly 0
    EXPECT_EQ(util_oracle({0, 1}, weights, params), SuperArm::of({1}, 2));
}

// The polynomial oracles must achieve exactly the brute-force reward.
TEST(OracleEquivalence, SeededRandomInstances) {
    RandomStream rng(2024);
    for (int trial = 0; trial < 250; ++trial) {
        const int k = 2 + static_cast<int>(rng.next_below(9));  // 2..10
        std::vector<double> weights(k);
        for (double& w : weights) w = rng.next_unit();
        std::vector<int> available;
        for (int i = 0; i < k; ++i) {
            if (rng.next_bernoulli(0.6)) available.push_back(i);
        }
        if (available.empty()) available.push_back(static_cast<int>(rng.next_below(k)));

        const int cap = 1 + static_cast<int>(rng.next_below(k));
        const auto topk_model = topk_reward(TopKParams{cap}, k);
        const double exact_topk =
            topk_model.evaluate(brute_force_oracle(available, weights, topk_model), weights);
        const double fast_topk =
            topk_model.evaluate(topk_oracle(available, weights, cap), weights);
        EXPECT_NEAR(fast_topk, exact_topk, 1e-12);

        UtilParams params;
        params.a.resize(k);
        params.b.resize(k);
        for (double& a : params.a) a = 0.2 + rng.next_unit();
        for (double& b : params.b) b = rng.next_unit();
        const auto util_model = util_reward(params);
        const double exact_util =
            util_model.evaluate(brute_force_oracle(available, weights, util_model), weights);
        const double fast_util =
            util_model.evaluate(util_oracle(available, weights, params), weights);
        EXPECT_NEAR(fast_util, exact_util, 1e-12);
    }
}

TEST(OracleOutputs, AreFeasible) {
    RandomStream rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 3 + static_cast<int>(rng.next_below(6));
        std::vector<double> weights(k);
        for (double& w : weights) w = rng.next_unit();
        std::vector<int> available;
        for (int i = 0; i < k; ++i) {
            if (rng.next_bernoulli(0.7)) available.push_back(i);
        }
        if (available.empty()) available.push_back(0);
        const int cap = 1 + static_cast<int>(rng.next_below(k));
        const auto model = topk_reward(TopKParams{cap}, k);
        EXPECT_TRUE(model.feasible(topk_oracle(available, weights, cap), available));
        EXPECT_TRUE(model.feasible(brute_force_oracle(available, weights, model), available));
    }
}

TEST(DegradedOracle, BetaOneForwardsEveryCall) {
    const auto model = topk_reward(TopKParams{2}, 5);
    DegradedOracle wrapped(make_topk_oracle(2), OracleSpec{1.0, 1.0}, model, 77);
    RandomStream rng(3);
    for (int call = 0; call < 50; ++call) {
        std::vector<double> weights(5);
        for (double& w : weights) w = rng.next_unit();
        EXPECT_EQ(wrapped({0, 1, 2, 3, 4}, weights), topk_oracle({0, 1, 2, 3, 4}, weights, 2));
    }
    EXPECT_EQ(wrapped.inner_calls(), 50);
}

TEST(DegradedOracle, BetaHalfForwardsAboutHalf) {
    const auto model = topk_reward(TopKParams{2}, 5);
    DegradedOracle wrapped(make_topk_oracle(2), OracleSpec{1.0, 0.5}, model, 99);
    const std::vector<double> weights{0.9, 0.7, 0.5, 0.3, 0.1};
    for (int call = 0; call < 10000; ++call) {
        (void)wrapped({0, 1, 2, 3, 4}, weights);
    }
    // Binomial(10^4, 0.5), 3-sigma band.
    EXPECT_NEAR(static_cast<double>(wrapped.inner_calls()), 5000.0, 150.0);
}

TEST(DegradedOracle, FallbackOutputsAreFeasibleAndDeterministic) {
    const auto model = topk_reward(TopKParams{2}, 5);
    const std::vector<double> weights{0.9, 0.7, 0.5, 0.3, 0.1};
    const std::vector<int> available{0, 2, 3, 4};
    DegradedOracle first(make_topk_oracle(2), OracleSpec{1.0, 0.3}, model, 4242);
    DegradedOracle second(make_topk_oracle(2), OracleSpec{1.0, 0.3}, model, 4242);
    for (int call = 0; call < 500; ++call) {
        const auto a = first(available, weights);
        const auto b = second(available, weights);
        EXPECT_EQ(a, b);
        EXPECT_TRUE(model.feasible(a, available));
    }
}

TEST(DegradedOracle, ExactInnerSatisfiesGammaContract) {
    // With an exact inner oracle, every forwarded answer meets any gamma <= 1.
    const auto model = topk_reward(TopKParams{2}, 4);
    DegradedOracle wrapped(make_topk_oracle(2), OracleSpec{0.9, 1.0}, model, 5);
    RandomStream rng(8);
    for (int call = 0; call < 200; ++call) {
        std::vector<double> weights(4);
        for (double& w : weights) w = rng.next_unit();
        const auto chosen = wrapped({0, 1, 2, 3}, weights);
        const auto best = brute_force_oracle({0, 1, 2, 3}, weights, model);
        EXPECT_GE(model.evaluate(chosen, weights),
                  0.9 * model.evaluate(best, weights) - 1e-12);
    }
}

TEST(OracleSpecValidation, RejectsOutOfRange) {
    EXPECT_THROW((OracleSpec{0.0, 1.0}.validate()), ValidationError);
    EXPECT_THROW((OracleSpec{1.0, 1.5}.validate()), ValidationError);
    EXPECT_NO_THROW((OracleSpec{1.0, 1.0}.validate()));
}

}  // namespace
}  // namespace csucb

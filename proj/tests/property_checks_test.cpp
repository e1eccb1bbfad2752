#include "csucb/property_checks.hpp"

#include <gtest/gtest.h>

#include "csucb/errors.hpp"

namespace csucb {
namespace {

RewardModel negated_sum_model(int k) {
    RewardModel model;
    model.k = k;
    model.max_super_arm_size = k;
    model.evaluate = [](const SuperArm& s, std::span<const double> mu) {
        double total = 0.0;
        for (int i : s) total -= mu[i];
        return total;
    };
    model.feasible = [](const SuperArm& s, const std::vector<int>& available) {
        return !s.empty() && is_subset_of(s, available);
    };
    return model;
}

TEST(PropertyChecks, ShippedModelsAreMonotone) {
    const auto util = util_reward(UtilParams{{1.0, 1.5, 0.7}, {0.2, 0.1, 0.4}});
    const auto topk = topk_reward(TopKParams{2}, 5);
    EXPECT_TRUE(check_monotonicity(util, 2000, 11).passed());
    EXPECT_TRUE(check_monotonicity(topk, 2000, 12).passed());
}

TEST(PropertyChecks, NegatedSumFailsMonotonicity) {
    const auto report = check_monotonicity(negated_sum_model(3), 100, 5);
    EXPECT_FALSE(report.passed());
}

TEST(PropertyChecks, DeclaredLipschitzConstantsHold) {
    const auto util = util_reward(UtilParams{{1.0, 1.5, 0.7}, {0.2, 0.1, 0.4}});
    const auto topk = topk_reward(TopKParams{3}, 6);
    EXPECT_TRUE(check_lipschitz(util, 2000, 21).passed());
    EXPECT_TRUE(check_lipschitz(topk, 2000, 22).passed());
}

TEST(PropertyChecks, UnderDeclaredConstantIsCaught) {
    auto topk = topk_reward(TopKParams{2}, 6);
    topk.lipschitz_c = 1.0;  // the honest constant is K = 2
    const auto report = check_lipschitz(topk, 10000, 23);
    EXPECT_FALSE(report.passed());
    const auto& v = report.violations.front();
    EXPECT_GT(v.observed, v.allowed + kPropertyCheckTolerance);
}

TEST(PropertyChecks, LinearSmoothnessHolds) {
    const auto util = util_reward(UtilParams{{1.0, 1.5, 0.7}, {0.2, 0.1, 0.4}});
    EXPECT_TRUE(check_bounded_smoothness(util, 2000, 31).passed());
}

TEST(PropertyChecks, UnderDeclaredSmoothnessIsCaught) {
    auto topk = topk_reward(TopKParams{2}, 6);
    topk.smoothness = SmoothnessBound{[](double x) { return 0.5 * x; },
                                      [](double y) { return 2.0 * y; }};
    EXPECT_FALSE(check_bounded_smoothness(topk, 10000, 32).passed());
}

TEST(PropertyChecks, MissingDescriptorsAreRejected) {
    auto model = negated_sum_model(3);
    EXPECT_THROW(check_lipschitz(model, 10, 1), ValidationError);
    EXPECT_THROW(check_bounded_smoothness(model, 10, 1), ValidationError);
    EXPECT_THROW(check_monotonicity(model, 0, 1), ValidationError);
}

}  // namespace
}  // namespace csucb

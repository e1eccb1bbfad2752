#pragma once

#include <cstdint>
#include <vector>

#include "csucb/reward.hpp"

namespace csucb {

// One counterexample found by a property checker.
struct PropertyViolation {
    SuperArm super_arm;
    std::vector<double> mu;
    std::vector<double> mu_prime;
    double observed = 0.0;  // the quantity that broke the bound
    double allowed = 0.0;   // the bound it had to respect
};

struct ViolationReport {
    long trials = 0;
    std::vector<PropertyViolation> violations;

    bool passed() const { return violations.empty(); }
};

// Absolute slack granted to every property check; suited to sums of at most
// k double-precision terms.
constexpr double kPropertyCheckTolerance = 1e-12;

// Samples pairs (mu, mu + nonnegative perturbation) and random feasible
// super-arms; reports every trial where the reward decreased.
ViolationReport check_monotonicity(const RewardModel& model, long trials, std::uint64_t seed);

// Samples random (S, mu, mu'); reports every trial violating
// |R_S(mu) - R_S(mu')| <= C * max_{i in S} |mu_i - mu'_i|.
// Rejects models without a declared Lipschitz constant.
ViolationReport check_lipschitz(const RewardModel& model, long trials, std::uint64_t seed);

// Same sampling as check_lipschitz, against |R_S(mu) - R_S(mu')| <= f(Lambda)
// with Lambda the max coordinate deviation on S. Rejects models without f.
ViolationReport check_bounded_smoothness(const RewardModel& model, long trials,
                                         std::uint64_t seed);

}  // namespace csucb

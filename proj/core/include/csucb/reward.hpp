#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "csucb/super_arm.hpp"

namespace csucb {

// Bounded-smoothness descriptor: |R_S(u) - R_S(v)| <= f(max coordinate gap).
// `f` must be strictly increasing and `f_inverse` its inverse.
struct SmoothnessBound {
    std::function<double(double)> f;
    std::function<double(double)> f_inverse;
};

// A pluggable reward function over super-arms, together with the feasibility
// predicate that defines which sets are legal pulls inside an availability
// set, and optional smoothness descriptors used by the regret bounds.
//
// `evaluate` must depend only on the coordinates of the quality vector that
// are indexed by the super-arm, and must be monotone in every coordinate.
struct RewardModel {
    int k = 0;
    std::function<double(const SuperArm&, std::span<const double>)> evaluate;
    std::function<bool(const SuperArm&, const std::vector<int>& available)> feasible;
    std::optional<double> lipschitz_c;
    std::optional<SmoothnessBound> smoothness;
    // Largest super-arm size the feasibility predicate can accept; lets
    // samplers pick candidate sizes without rejection on size alone.
    int max_super_arm_size = 0;
};

// Linear utility reward: sum over pulled arms of a_i * mu_i - b_i.
struct UtilParams {
    std::vector<double> a;  // per-arm gain, strictly positive
    std::vector<double> b;  // per-arm fixed cost, nonnegative

    void validate() const;
    int k() const { return static_cast<int>(a.size()); }
};

// Additive top-K reward: pull up to K arms, collect the sum of their means.
struct TopKParams {
    int K = 1;

    void validate(int k) const;
};

// Builds the utility model. Any nonempty subset of the availability set is
// feasible. Lipschitz constant: max(1, sum a_i); smoothness: linear.
RewardModel util_reward(const UtilParams& params);

// Builds the top-K model. Feasible sets have 1 <= |S| <= K. On feasible sets
// the reward is the plain sum of means; oversized sets (which arise only from
// the policy's cold-start pulls) are scored by their best K members, so a
// forced whole-set pull is priced at the best legal action's value.
// Lipschitz constant: K; smoothness: linear with slope K.
RewardModel topk_reward(const TopKParams& params, int k);

}  // namespace csucb

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "csucb/oracle.hpp"
#include "csucb/reward.hpp"
#include "csucb/super_arm.hpp"

namespace csucb {

// Per-arm sufficient statistics.
struct ArmState {
    std::int64_t pulls = 0;
    double feedback_sum = 0.0;

    double empirical_mean() const;
};

// Semi-bandit feedback: one (arm, value in [0,1]) entry per pulled arm.
using Feedback = std::vector<std::pair<int, double>>;

// Full policy state: k arm statistics plus the 1-based round counter. The
// counter advances once per step/update pair; a value type owned by a single
// run, safe to move across threads, no internal synchronization.
class PolicyState {
public:
    explicit PolicyState(int k);

    int k() const { return static_cast<int>(arms_.size()); }
    const std::vector<ArmState>& arms() const { return arms_; }
    const ArmState& arm(int i) const { return arms_[static_cast<std::size_t>(i)]; }

    // The current round t (1-based); log(t) feeds the selection indices.
    std::int64_t round() const { return round_; }

    friend void update(PolicyState& state, const SuperArm& pulled, const Feedback& feedback);

private:
    std::vector<ArmState> arms_;
    std::int64_t round_ = 1;
};

// Optimistic quality estimate: empirical mean plus sqrt(3 ln(t) / (2 pulls)).
// Values may exceed 1; monotone oracles are unaffected by uniform inflation,
// and clipping could change their output. Rejects never-pulled arms (those
// are handled by the cold-start branch of `step`).
double ucb_index(const ArmState& arm, std::int64_t t);

// One selection. If any available arm was never pulled, the whole
// availability set is pulled (cold start); a singleton availability forces
// the choice; otherwise the oracle maximizes over the UCB indices.
SuperArm step(const PolicyState& state, const std::vector<int>& available, const Oracle& oracle,
              const RewardModel& model);

// Folds semi-bandit feedback into the pulled arms' statistics and advances
// the round counter. Feedback must cover exactly the pulled set, values in
// [0,1]; untouched arms keep their statistics bit-for-bit.
void update(PolicyState& state, const SuperArm& pulled, const Feedback& feedback);

}  // namespace csucb

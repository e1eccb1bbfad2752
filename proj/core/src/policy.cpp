#include "csucb/policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csucb/errors.hpp"

namespace csucb {

double ArmState::empirical_mean() const {
    if (pulls <= 0) {
        throw ValidationError("empirical_mean: arm was never pulled");
    }
    return feedback_sum / static_cast<double>(pulls);
}

PolicyState::PolicyState(int k) {
    if (k < 1) throw ValidationError("policy: k must be >= 1");
    arms_.resize(static_cast<std::size_t>(k));
}

double ucb_index(const ArmState& arm, std::int64_t t) {
    if (arm.pulls <= 0) {
        throw ValidationError("ucb_index: arm has no pulls; cold start must pull it first");
    }
    if (t < 1) throw ValidationError("ucb_index: round must be >= 1");
    return arm.empirical_mean() +
           std::sqrt(3.0 * std::log(static_cast<double>(t)) /
                     (2.0 * static_cast<double>(arm.pulls)));
}

namespace {

void require_available_set(const std::vector<int>& available, int k) {
    if (available.empty()) {
        throw ValidationError("step: availability set is empty; skip the round instead");
    }
    for (std::size_t i = 0; i < available.size(); ++i) {
        if (available[i] < 0 || available[i] >= k) {
            throw ValidationError("step: availability index out of range");
        }
        if (i > 0 && available[i] <= available[i - 1]) {
            throw ValidationError("step: availability set must be sorted and duplicate-free");
        }
    }
}

}  // namespace

SuperArm step(const PolicyState& state, const std::vector<int>& available, const Oracle& oracle,
              const RewardModel& model) {
    require_available_set(available, state.k());

    bool has_cold_arm = false;
    for (int i : available) {
        if (state.arm(i).pulls == 0) {
            has_cold_arm = true;
            break;
        }
    }
    if (has_cold_arm) {
        return SuperArm::from_sorted_unchecked(available);
    }
    if (available.size() == 1) {
        return SuperArm::from_sorted_unchecked(available);
    }

    std::vector<double> weights(static_cast<std::size_t>(state.k()), 0.0);
    for (int i : available) {
        weights[static_cast<std::size_t>(i)] = ucb_index(state.arm(i), state.round());
    }
    (void)model;  // feasibility is enforced by the oracle itself
    return oracle(available, weights);
}

void update(PolicyState& state, const SuperArm& pulled, const Feedback& feedback) {
    if (pulled.empty()) throw ValidationError("update: pulled set is empty");
    if (feedback.size() != pulled.size()) {
        throw ValidationError("update: feedback must have exactly one entry per pulled arm");
    }
    for (const auto& [arm, value] : feedback) {
        if (arm < 0 || arm >= state.k()) {
            throw ValidationError("update: feedback arm index out of range");
        }
        if (!pulled.contains(arm)) {
            throw ValidationError("update: feedback entry for arm " + std::to_string(arm) +
                                  " which was not pulled");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ValidationError("update: feedback for arm " + std::to_string(arm) +
                                  " outside [0,1]");
        }
    }
    // Equal sizes + membership + duplicate check cover the exact-coverage rule.
    std::vector<int> seen;
    seen.reserve(feedback.size());
    for (const auto& [arm, value] : feedback) seen.push_back(arm);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw ValidationError("update: duplicate feedback entry");
    }

    for (const auto& [arm, value] : feedback) {
        auto& a = state.arms_[static_cast<std::size_t>(arm)];
        a.pulls += 1;
        a.feedback_sum += value;
    }
    state.round_ += 1;
}

}  // namespace csucb

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "csucb/oracle.hpp"
#include "csucb/policy.hpp"
#include "csucb/reward.hpp"
#include "csucb/rng.hpp"

namespace csucb {

// Tagged reward-model parameters.
using RewardSpec = std::variant<UtilParams, TopKParams>;

RewardModel make_reward_model(const RewardSpec& spec, int k);

// The model's exact polynomial-time oracle.
Oracle make_exact_oracle(const RewardSpec& spec);

// Scripted availability: one set per round, possibly empty.
struct AvailabilitySequence {
    std::vector<std::vector<int>> rounds;
};

// Plain-text script: one round per line, whitespace-separated 0-based arm
// indices, empty line = empty set. Rejects out-of-range or duplicate indices
// with the offending line number.
AvailabilitySequence load_availability_script(const std::string& path, int k);

// Ground-truth description of one simulated bandit instance.
struct InstanceConfig {
    int k = 0;
    std::vector<double> mu;        // true means, in [0,1]
    std::vector<double> avail_p;   // per-arm availability probabilities, in (0,1]
    std::optional<AvailabilitySequence> availability_script;
    RewardSpec reward = TopKParams{1};
    std::int64_t horizon = 1;
    double gamma = 1.0;
    double beta = 1.0;
    int runs = 1;
    std::uint64_t master_seed = 0;
    // Draw a fresh (mu, avail_p) pair per replicate instead of fixing one
    // instance across runs.
    bool resample_instance = false;

    void validate() const;
};

// Disjoint per-run randomness. Every draw is keyed by (round, arm) so the
// trace is a pure function of (master_seed, run_index, t): what the policy
// pulls never shifts later draws.
struct RunRng {
    std::uint64_t availability_seed = 0;
    std::uint64_t feedback_seed = 0;
    std::uint64_t oracle_seed = 0;
    std::uint64_t instance_seed = 0;

    static RunRng for_run(std::uint64_t master_seed, int run_index);
};

// Availability at round t (1-based): the scripted set when a script is
// present, otherwise independent Bernoulli(avail_p_i) draws. May be empty.
std::vector<int> draw_availability(const InstanceConfig& config, std::int64_t t,
                                   const RunRng& rng);

// Bernoulli(mu_i) semi-bandit feedback for each pulled arm at round t.
Feedback draw_feedback(const SuperArm& pulled, std::span<const double> mu, std::int64_t t,
                       const RunRng& rng);

// Stream that materializes the base (run-independent) instance of an
// experiment from its master seed.
RandomStream instance_stream(std::uint64_t master_seed);

// Random-quality protocol: mu_i ~ U[0.3, 0.8], avail_p_i ~ U[0.4, 0.9].
// Reward model, horizon, seeds are left at defaults for the caller to fill.
InstanceConfig sample_exp_one(int k, RandomStream& rng);

// Near-equal-quality protocol: searches for a mean vector whose enumerated
// minimum gap is within 10% of `delta_min_target` (and, when given, whose
// gap ratio sigma is within 10% of `sigma_target`), validating every
// candidate by exact gap enumeration. Fails after 10^4 candidate vectors.
InstanceConfig sample_exp_two(int k, const RewardSpec& reward, double delta_min_target,
                              std::optional<double> sigma_target, RandomStream& rng,
                              double gamma = 1.0);

}  // namespace csucb

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "csucb/reward.hpp"
#include "csucb/super_arm.hpp"

namespace csucb {

// Approximation-oracle contract: the returned set achieves at least gamma
// times the optimal reward with probability at least beta.
struct OracleSpec {
    double gamma = 1.0;
    double beta = 1.0;

    void validate() const;
};

// A combinatorial maximization oracle: given the availability set and a
// weight vector (true means or UCB estimates), returns the super-arm to pull.
using Oracle = std::function<SuperArm(const std::vector<int>& available,
                                      std::span<const double> weights)>;

// Exact oracle by exhaustive enumeration; capped at |available| <= 20.
// Ties break by smaller cardinality, then lexicographically smaller members.
SuperArm brute_force_oracle(const std::vector<int>& available, std::span<const double> weights,
                            const RewardModel& model);

// Exact polynomial oracle for the top-K model: the min(K, |available|) arms
// with the largest weights, ties to the lower index.
SuperArm topk_oracle(const std::vector<int>& available, std::span<const double> weights, int K);

// Exact polynomial oracle for the utility model: every available arm with
// strictly positive utility, or the least-bad singleton when none has one
// (a pull must be nonempty).
SuperArm util_oracle(const std::vector<int>& available, std::span<const double> weights,
                     const UtilParams& params);

Oracle make_brute_force_oracle(RewardModel model);
Oracle make_topk_oracle(int K);
Oracle make_util_oracle(UtilParams params);

// All feasible super-arms within `available`, in deterministic (mask) order.
// Capped at |available| <= 20.
std::vector<SuperArm> enumerate_feasible(const RewardModel& model,
                                         const std::vector<int>& available);

// (gamma, beta)-degrading wrapper: with probability beta forwards the inner
// oracle's answer, otherwise returns a uniformly random feasible super-arm.
// Deterministic given (seed, call index).
class DegradedOracle {
public:
    DegradedOracle(Oracle inner, OracleSpec spec, RewardModel model, std::uint64_t seed);

    SuperArm operator()(const std::vector<int>& available, std::span<const double> weights);

    long calls() const { return calls_; }
    long inner_calls() const { return inner_calls_; }

private:
    Oracle inner_;
    OracleSpec spec_;
    RewardModel model_;
    std::uint64_t seed_;
    long calls_ = 0;
    long inner_calls_ = 0;
};

// Same wrapper packaged as an Oracle (shared state across copies).
Oracle degrade(Oracle inner, OracleSpec spec, RewardModel model, std::uint64_t seed);

}  // namespace csucb

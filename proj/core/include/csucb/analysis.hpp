#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "csucb/reward.hpp"
#include "csucb/super_arm.hpp"

namespace csucb {

// Apery's constant, zeta(3); hard-coded, no series evaluation at runtime.
constexpr double kZeta3 = 1.2020569031595942854;

// One simulated round as seen by the regret accounting.
struct RoundRecord {
    std::int64_t t = 0;
    double opt_reward = 0.0;
    double realized_reward = 0.0;
    double increment = 0.0;  // gamma * beta * opt - realized
};

// Per-round sleeping-regret series. The optimal reward is always computed by
// exhaustive search on the true means, never on estimates. One ledger serves
// one run: the (model, mu, gamma, beta) context must stay fixed across calls
// so the per-availability optimum cache stays valid.
class RegretLedger {
public:
    const std::vector<RoundRecord>& records() const { return records_; }
    const std::vector<double>& cumulative() const { return cumulative_; }

    double total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
    double max_increment() const;
    std::int64_t rounds() const { return static_cast<std::int64_t>(records_.size()); }

    friend void record_round(RegretLedger& ledger, const std::vector<int>& available,
                             const SuperArm& pulled, const RewardModel& model,
                             std::span<const double> mu, double gamma, double beta);

private:
    std::vector<RoundRecord> records_;
    std::vector<double> cumulative_;
    std::unordered_map<std::uint32_t, double> opt_cache_;
};

// Appends one round. An empty availability set records a zero increment (the
// pulled set must then be empty too). Otherwise the pulled set must be a
// nonempty subset of the availability set; the policy's cold-start pulls may
// exceed the model's feasible size, so only containment is enforced.
void record_round(RegretLedger& ledger, const std::vector<int>& available,
                  const SuperArm& pulled, const RewardModel& model, std::span<const double> mu,
                  double gamma, double beta);

// Instance gap structure: the gamma-discounted suboptimality gaps over a
// family of availability sets.
struct GapSummary {
    struct Row {
        std::vector<int> available;
        double delta_min = 0.0;
        double delta_max = 0.0;
    };

    // Unset when no availability set in the family has a bad super-arm.
    std::optional<double> delta_min;
    std::optional<double> delta_max;
    std::vector<Row> table;  // one row per availability set with bad super-arms

    bool defined() const { return delta_min.has_value(); }
    std::optional<double> sigma() const {
        if (!defined()) return std::nullopt;
        return *delta_max / *delta_min;
    }
};

struct AllSubsets {};
using AvailabilityFamily = std::variant<AllSubsets, std::vector<std::vector<int>>>;

// Enumerates, for every availability set A in the family, every feasible
// super-arm, the exact optimum, and the bad-set gaps Delta_S = gamma * OPT_A
// - R_S > 0. AllSubsets requires k <= 15.
GapSummary instance_gaps(std::span<const double> mu, const RewardModel& model, double gamma,
                         const AvailabilityFamily& family);

// Closed-form regret-bound evaluators (overlay curves). T >= 2 throughout.
// Logarithmic instance-dependent bound.
double bound_thm1(int k, double c, double sigma, double delta_min, double beta, double t);
// sqrt(T log T) weak instance-dependent bound.
double bound_thm2(int k, double c, double sigma, double t);
// T^(2/3) instance-independent bound.
double bound_thm3(int k, double c, double t);
// Logarithmic bound under bounded smoothness.
double bound_thm4(int k, double delta_min, double delta_max,
                  const std::function<double(double)>& f_inverse, double t);

// Cap on any single-round gamma=beta=1 regret increment under a C-Lipschitz
// reward: C * (1 + sqrt(3 ln(T) / 2)).
double observation2_cap(double c, double t);

// Least-squares slope of ln(cumulative[t]) against ln(t) over geometrically
// spaced rounds in [t_lo, t_hi]. cumulative[i] is the value after round i+1;
// values in the window must be positive.
double growth_exponent(std::span<const double> cumulative, std::int64_t t_lo, std::int64_t t_hi);

}  // namespace csucb

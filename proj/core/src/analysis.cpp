#include "csucb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "csucb/errors.hpp"
#include "csucb/oracle.hpp"

namespace csucb {

double RegretLedger::max_increment() const {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& r : records_) top = std::max(top, r.increment);
    return top;
}

void record_round(RegretLedger& ledger, const std::vector<int>& available,
                  const SuperArm& pulled, const RewardModel& model, std::span<const double> mu,
                  double gamma, double beta) {
    const std::int64_t t = static_cast<std::int64_t>(ledger.records_.size()) + 1;
    const double prev = ledger.cumulative_.empty() ? 0.0 : ledger.cumulative_.back();

    if (available.empty()) {
        if (!pulled.empty()) {
            throw ValidationError("record_round: pull recorded against an empty availability set");
        }
        ledger.records_.push_back({t, 0.0, 0.0, 0.0});
        ledger.cumulative_.push_back(prev);
        return;
    }
    if (pulled.empty()) {
        throw ValidationError("record_round: empty pull in a nonempty round");
    }
    if (!is_subset_of(pulled, available)) {
        throw ValidationError("record_round: pulled set " + pulled.to_string() +
                              " is not contained in the availability set");
    }

    double opt;
    if (model.k <= 32) {
        std::uint32_t mask = 0;
        for (int i : available) mask |= (1u << i);
        auto it = ledger.opt_cache_.find(mask);
        if (it == ledger.opt_cache_.end()) {
            opt = model.evaluate(brute_force_oracle(available, mu, model), mu);
            ledger.opt_cache_.emplace(mask, opt);
        } else {
            opt = it->second;
        }
    } else {
        opt = model.evaluate(brute_force_oracle(available, mu, model), mu);
    }

    const double realized = model.evaluate(pulled, mu);
    const double increment = gamma * beta * opt - realized;
    ledger.records_.push_back({t, opt, realized, increment});
    ledger.cumulative_.push_back(prev + increment);
}

namespace {

constexpr int kAllSubsetsCap = 15;

void gaps_for_availability(const std::vector<int>& available, std::span<const double> mu,
                           const RewardModel& model, double gamma, GapSummary& summary) {
    const int m = static_cast<int>(available.size());
    bool any_feasible = false;
    double opt = 0.0;
    std::vector<double> rewards;
    rewards.reserve(1u << m);
    std::vector<int> members;
    for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
        members.clear();
        for (int bit = 0; bit < m; ++bit) {
            if (sub & (1u << bit)) members.push_back(available[bit]);
        }
        auto s = SuperArm::from_sorted_unchecked(members);
        if (!model.feasible(s, available)) continue;
        const double reward = model.evaluate(s, mu);
        rewards.push_back(reward);
        if (!any_feasible || reward > opt) {
            any_feasible = true;
            opt = reward;
        }
    }
    if (!any_feasible) return;

    double worst_bad = std::numeric_limits<double>::infinity();   // smallest reward among bads
    double best_bad = -std::numeric_limits<double>::infinity();   // largest reward among bads
    bool any_bad = false;
    const double discounted_opt = gamma * opt;
    for (double reward : rewards) {
        if (discounted_opt - reward > 0.0) {
            any_bad = true;
            worst_bad = std::min(worst_bad, reward);
            best_bad = std::max(best_bad, reward);
        }
    }
    if (!any_bad) return;

    const double local_min = discounted_opt - best_bad;
    const double local_max = discounted_opt - worst_bad;
    summary.table.push_back({available, local_min, local_max});
    if (!summary.delta_min || local_min < *summary.delta_min) summary.delta_min = local_min;
    if (!summary.delta_max || local_max > *summary.delta_max) summary.delta_max = local_max;
}

}  // namespace

GapSummary instance_gaps(std::span<const double> mu, const RewardModel& model, double gamma,
                         const AvailabilityFamily& family) {
    if (static_cast<int>(mu.size()) != model.k) {
        throw ValidationError("instance_gaps: mu length does not match the model's arm count");
    }
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ValidationError("instance_gaps: gamma must be in (0, 1]");
    }
    GapSummary summary;
    if (std::holds_alternative<AllSubsets>(family)) {
        const int k = model.k;
        if (k > kAllSubsetsCap) {
            throw BudgetError("instance_gaps: all-subsets enumeration needs k <= " +
                              std::to_string(kAllSubsetsCap) + ", got k=" + std::to_string(k) +
                              "; pass an explicit availability list instead");
        }
        std::vector<int> available;
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            available.clear();
            for (int i = 0; i < k; ++i) {
                if (mask & (1u << i)) available.push_back(i);
            }
            gaps_for_availability(available, mu, model, gamma, summary);
        }
    } else {
        const auto& sets = std::get<std::vector<std::vector<int>>>(family);
        std::vector<std::vector<int>> seen;
        for (const auto& raw : sets) {
            if (raw.empty()) continue;  // empty rounds carry no gap information
            auto available = raw;
            std::sort(available.begin(), available.end());
            available.erase(std::unique(available.begin(), available.end()), available.end());
            for (int i : available) {
                if (i < 0 || i >= model.k) {
                    throw ValidationError("instance_gaps: availability index out of range");
                }
            }
            if (available.size() > 20) {
                throw BudgetError("instance_gaps: availability set larger than 20 arms");
            }
            if (std::find(seen.begin(), seen.end(), available) != seen.end()) continue;
            seen.push_back(available);
            gaps_for_availability(available, mu, model, gamma, summary);
        }
    }
    return summary;
}

namespace {

void require_horizon(double t, double least) {
    if (!(t >= least)) {
        throw ValidationError("bound evaluator: T must be >= " + std::to_string(least));
    }
}

}  // namespace

double bound_thm1(int k, double c, double sigma, double delta_min, double beta, double t) {
    if (k < 1) throw ValidationError("bound_thm1: k must be >= 1");
    if (!(c > 0.0)) throw ValidationError("bound_thm1: C must be > 0");
    if (!(sigma > 0.0)) throw ValidationError("bound_thm1: sigma must be > 0");
    if (!(delta_min > 0.0)) throw ValidationError("bound_thm1: delta_min must be > 0");
    if (!(beta >= 0.0 && beta <= 1.0)) throw ValidationError("bound_thm1: beta must be in [0, 1]");
    require_horizon(t, 2.0);
    const double log_t = std::log(t);
    return 2.0 * beta * k * c *
           (kZeta3 * (1.0 + std::sqrt(3.0 * log_t / 2.0)) + 3.0 * sigma * c * log_t / delta_min);
}

double bound_thm2(int k, double c, double sigma, double t) {
    if (k < 1) throw ValidationError("bound_thm2: k must be >= 1");
    if (!(c > 0.0)) throw ValidationError("bound_thm2: C must be > 0");
    if (!(sigma > 0.0)) throw ValidationError("bound_thm2: sigma must be > 0");
    require_horizon(t, 2.0);
    const double log_t = std::log(t);
    return 4.0 * c * std::sqrt(6.0 * k * sigma * t * log_t) + 2.0 * k * c * kZeta3;
}

double bound_thm3(int k, double c, double t) {
    if (k < 1) throw ValidationError("bound_thm3: k must be >= 1");
    if (!(c > 0.0)) throw ValidationError("bound_thm3: C must be > 0");
    require_horizon(t, 2.0);
    const double log_t = std::log(t);
    const double lambda = 1.0 + std::sqrt(3.0 * log_t / 2.0);
    return c * (1.0 + lambda) * std::cbrt(6.0 * k * t * t * log_t) + 2.0 * k * lambda * c * kZeta3;
}

double bound_thm4(int k, double delta_min, double delta_max,
                  const std::function<double(double)>& f_inverse, double t) {
    if (k < 1) throw ValidationError("bound_thm4: k must be >= 1");
    if (!(delta_min > 0.0)) throw ValidationError("bound_thm4: delta_min must be > 0");
    if (!(delta_max >= delta_min)) {
        throw ValidationError("bound_thm4: delta_max must be >= delta_min");
    }
    require_horizon(t, 2.0);
    const double inverse_gap = f_inverse(delta_min);
    if (!(inverse_gap > 0.0)) {
        throw ValidationError("bound_thm4: f_inverse(delta_min) must be > 0");
    }
    const double log_t = std::log(t);
    return (6.0 * log_t / (inverse_gap * inverse_gap) + 2.0 * kZeta3) * k * delta_max;
}

double observation2_cap(double c, double t) {
    if (!(c > 0.0)) throw ValidationError("observation2_cap: C must be > 0");
    require_horizon(t, 1.0);
    return c * (1.0 + std::sqrt(3.0 * std::log(t) / 2.0));
}

double growth_exponent(std::span<const double> cumulative, std::int64_t t_lo, std::int64_t t_hi) {
    const auto size = static_cast<std::int64_t>(cumulative.size());
    if (!(1 <= t_lo && t_lo < t_hi && t_hi <= size)) {
        throw ValidationError("growth_exponent: need 1 <= t_lo < t_hi <= series length");
    }
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        if (!(cumulative[static_cast<std::size_t>(t - 1)] > 0.0)) {
            throw ValidationError(
                "growth_exponent: nonpositive cumulative value at t=" + std::to_string(t) +
                "; shift the window later");
        }
    }

    constexpr int kPoints = 32;
    std::vector<std::int64_t> rounds;
    rounds.reserve(kPoints);
    const double ratio = static_cast<double>(t_hi) / static_cast<double>(t_lo);
    for (int j = 0; j < kPoints; ++j) {
        const double exact = t_lo * std::pow(ratio, static_cast<double>(j) / (kPoints - 1));
        const auto t = static_cast<std::int64_t>(std::llround(exact));
        if (rounds.empty() || t > rounds.back()) rounds.push_back(std::min(t, t_hi));
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::int64_t t : rounds) {
        const double value = cumulative[static_cast<std::size_t>(t - 1)];
        const double x = std::log(static_cast<double>(t));
        const double y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(rounds.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace csucb

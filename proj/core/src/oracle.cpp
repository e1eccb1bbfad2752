#include "csucb/oracle.hpp"

#include <algorithm>
#include <string>

#include "csucb/errors.hpp"
#include "csucb/rng.hpp"

namespace csucb {

namespace {

constexpr int kEnumerationCap = 20;

void require_available(const std::vector<int>& available, std::span<const double> weights) {
    if (available.empty()) {
        throw ValidationError("oracle: availability set is empty");
    }
    for (std::size_t i = 1; i < available.size(); ++i) {
        if (available[i] <= available[i - 1]) {
            throw ValidationError("oracle: availability set must be sorted and duplicate-free");
        }
    }
    if (available.front() < 0 ||
        static_cast<std::size_t>(available.back()) >= weights.size()) {
        throw ValidationError("oracle: availability index out of weight-vector range");
    }
}

// True when lhs beats rhs under the deterministic tie order:
// smaller cardinality first, then lexicographically smaller member list.
bool tie_beats(const std::vector<int>& lhs, const std::vector<int>& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

}  // namespace

void OracleSpec::validate() const {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ValidationError("oracle spec: gamma must be in (0, 1]");
    }
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw ValidationError("oracle spec: beta must be in (0, 1]");
    }
}

SuperArm brute_force_oracle(const std::vector<int>& available, std::span<const double> weights,
                            const RewardModel& model) {
    require_available(available, weights);
    const int m = static_cast<int>(available.size());
    if (m > kEnumerationCap) {
        throw BudgetError("brute_force_oracle: |available| = " + std::to_string(m) +
                          " exceeds the enumeration cap of " + std::to_string(kEnumerationCap));
    }
    bool found = false;
    double best_reward = 0.0;
    std::vector<int> best_members;
    std::vector<int> members;
    for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
        members.clear();
        for (int bit = 0; bit < m; ++bit) {
            if (sub & (1u << bit)) members.push_back(available[bit]);
        }
        auto s = SuperArm::from_sorted_unchecked(members);
        if (!model.feasible(s, available)) continue;
        const double reward = model.evaluate(s, weights);
        if (!found || reward > best_reward ||
            (reward == best_reward && tie_beats(members, best_members))) {
            found = true;
            best_reward = reward;
            best_members = members;
        }
    }
    if (!found) {
        throw ValidationError("brute_force_oracle: no feasible super-arm in availability set");
    }
    return SuperArm::from_sorted_unchecked(std::move(best_members));
}

SuperArm topk_oracle(const std::vector<int>& available, std::span<const double> weights, int K) {
    require_available(available, weights);
    if (K < 1) throw ValidationError("topk_oracle: K must be >= 1");
    const int take = std::min<int>(K, static_cast<int>(available.size()));
    std::vector<int> members(available);
    std::partial_sort(members.begin(), members.begin() + take, members.end(),
                      [&weights](int lhs, int rhs) {
                          if (weights[lhs] != weights[rhs]) return weights[lhs] > weights[rhs];
                          return lhs < rhs;
                      });
    members.resize(take);
    std::sort(members.begin(), members.end());
    return SuperArm::from_sorted_unchecked(std::move(members));
}

SuperArm util_oracle(const std::vector<int>& available, std::span<const double> weights,
                     const UtilParams& params) {
    require_available(available, weights);
    std::vector<int> members;
    for (int i : available) {
        if (params.a[i] * weights[i] - params.b[i] > 0.0) members.push_back(i);
    }
    if (members.empty()) {
        // Nothing profitable: a pull is still required, take the least-bad arm.
        int best = available.front();
        double best_utility = params.a[best] * weights[best] - params.b[best];
        for (int i : available) {
            const double utility = params.a[i] * weights[i] - params.b[i];
            if (utility > best_utility) {
                best = i;
                best_utility = utility;
            }
        }
        members.push_back(best);
    }
    return SuperArm::from_sorted_unchecked(std::move(members));
}

Oracle make_brute_force_oracle(RewardModel model) {
    return [model = std::move(model)](const std::vector<int>& available,
                                      std::span<const double> weights) {
        return brute_force_oracle(available, weights, model);
    };
}

Oracle make_topk_oracle(int K) {
    return [K](const std::vector<int>& available, std::span<const double> weights) {
        return topk_oracle(available, weights, K);
    };
}

Oracle make_util_oracle(UtilParams params) {
    return [params = std::move(params)](const std::vector<int>& available,
                                        std::span<const double> weights) {
        return util_oracle(available, weights, params);
    };
}

std::vector<SuperArm> enumerate_feasible(const RewardModel& model,
                                         const std::vector<int>& available) {
    const int m = static_cast<int>(available.size());
    if (m > kEnumerationCap) {
        throw BudgetError("enumerate_feasible: |available| = " + std::to_string(m) +
                          " exceeds the enumeration cap of " + std::to_string(kEnumerationCap));
    }
    std::vector<SuperArm> feasible;
    std::vector<int> members;
    for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
        members.clear();
        for (int bit = 0; bit < m; ++bit) {
            if (sub & (1u << bit)) members.push_back(available[bit]);
        }
        auto s = SuperArm::from_sorted_unchecked(members);
        if (model.feasible(s, available)) feasible.push_back(std::move(s));
    }
    return feasible;
}

DegradedOracle::DegradedOracle(Oracle inner, OracleSpec spec, RewardModel model,
                               std::uint64_t seed)
    : inner_(std::move(inner)), spec_(spec), model_(std::move(model)), seed_(seed) {
    spec_.validate();
}

SuperArm DegradedOracle::operator()(const std::vector<int>& available,
                                    std::span<const double> weights) {
    const std::uint64_t call = static_cast<std::uint64_t>(calls_++);
    const double coin = u64_to_unit(splitmix_at(seed_, 2 * call));
    if (coin < spec_.beta) {
        ++inner_calls_;
        return inner_(available, weights);
    }
    auto feasible = enumerate_feasible(model_, available);
    if (feasible.empty()) {
        throw ValidationError("degraded oracle: no feasible super-arm in availability set");
    }
    const std::uint64_t pick = splitmix_at(seed_, 2 * call + 1) % feasible.size();
    return feasible[pick];
}

Oracle degrade(Oracle inner, OracleSpec spec, RewardModel model, std::uint64_t seed) {
    auto state = std::make_shared<DegradedOracle>(std::move(inner), spec, std::move(model), seed);
    return [state](const std::vector<int>& available, std::span<const double> weights) {
        return (*state)(available, weights);
    };
}

}  // namespace csucb

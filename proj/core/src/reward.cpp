#include "csucb/reward.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "csucb/errors.hpp"

namespace csucb {

void UtilParams::validate() const {
    if (a.empty() || a.size() != b.size()) {
        throw ValidationError("util reward: a and b must be nonempty and equally sized");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] > 0.0)) {
            throw ValidationError("util reward: a[" + std::to_string(i) + "] must be > 0");
        }
        if (!(b[i] >= 0.0)) {
            throw ValidationError("util reward: b[" + std::to_string(i) + "] must be >= 0");
        }
    }
}

void TopKParams::validate(int k) const {
    if (K < 1 || K > k) {
        throw ValidationError("topk reward: K must be in [1, k], got K=" + std::to_string(K) +
                              " with k=" + std::to_string(k));
    }
}

RewardModel util_reward(const UtilParams& params) {
    params.validate();
    const int k = params.k();
    RewardModel model;
    model.k = k;
    model.max_super_arm_size = k;
    model.evaluate = [params](const SuperArm& s, std::span<const double> mu) {
        double total = 0.0;
        for (int i : s) {
            total += params.a[i] * mu[i] - params.b[i];
        }
        return total;
    };
    model.feasible = [](const SuperArm& s, const std::vector<int>& available) {
        return !s.empty() && is_subset_of(s, available);
    };
    const double gain_sum = std::accumulate(params.a.begin(), params.a.end(), 0.0);
    const double c = std::max(1.0, gain_sum);
    model.lipschitz_c = c;
    model.smoothness = SmoothnessBound{
        [c](double lambda) { return c * lambda; },
        [c](double y) { return y / c; },
    };
    return model;
}

RewardModel topk_reward(const TopKParams& params, int k) {
    params.validate(k);
    const int cap = params.K;
    RewardModel model;
    model.k = k;
    model.max_super_arm_size = cap;
    model.evaluate = [cap](const SuperArm& s, std::span<const double> mu) {
        if (static_cast<int>(s.size()) <= cap) {
            double total = 0.0;
            for (int i : s) total += mu[i];
            return total;
        }
        // Oversized pull: score the best `cap` members. Ties go to the lower
        // index and the sum runs in ascending index order, so the value is
        // bit-identical to evaluating the equivalent feasible set.
        std::vector<int> members(s.begin(), s.end());
        std::partial_sort(members.begin(), members.begin() + cap, members.end(),
                          [&mu](int lhs, int rhs) {
                              if (mu[lhs] != mu[rhs]) return mu[lhs] > mu[rhs];
                              return lhs < rhs;
                          });
        members.resize(cap);
        std::sort(members.begin(), members.end());
        double total = 0.0;
        for (int i : members) total += mu[i];
        return total;
    };
    model.feasible = [cap](const SuperArm& s, const std::vector<int>& available) {
        return !s.empty() && static_cast<int>(s.size()) <= cap && is_subset_of(s, available);
    };
    const double c = static_cast<double>(cap);
    model.lipschitz_c = c;
    model.smoothness = SmoothnessBound{
        [c](double lambda) { return c * lambda; },
        [c](double y) { return y / c; },
    };
    return model;
}

}  // namespace csucb

#include "csucb/property_checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "csucb/errors.hpp"
#include "csucb/rng.hpp"

namespace csucb {

namespace {

// Random feasible super-arm within the full arm set. Candidate sizes stay
// within the model's declared cap; the predicate still gets the final say.
SuperArm sample_feasible(const RewardModel& model, RandomStream& rng) {
    const int k = model.k;
    const int max_size = std::max(1, std::min(model.max_super_arm_size, k));
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 0);

    for (int attempt = 0; attempt < 64; ++attempt) {
        const int size = 1 + static_cast<int>(rng.next_below(max_size));
        for (int i = 0; i < size; ++i) {
            const int j = i + static_cast<int>(rng.next_below(k - i));
            std::swap(all[i], all[j]);
        }
        auto s = SuperArm::of(std::vector<int>(all.begin(), all.begin() + size), k);
        if (model.feasible(s, all_arms(k))) {
            return s;
        }
    }
    throw ValidationError("could not sample a feasible super-arm after 64 attempts");
}

std::vector<double> sample_unit_vector(int k, RandomStream& rng) {
    std::vector<double> v(k);
    for (double& x : v) x = rng.next_unit();
    return v;
}

}  // namespace

ViolationReport check_monotonicity(const RewardModel& model, long trials, std::uint64_t seed) {
    if (trials <= 0) throw ValidationError("check_monotonicity: trials must be > 0");
    ViolationReport report;
    report.trials = trials;
    RandomStream rng(seed);
    for (long trial = 0; trial < trials; ++trial) {
        auto mu = sample_unit_vector(model.k, rng);
        auto mu_prime = mu;
        for (double& x : mu_prime) {
            x = std::min(1.0, x + 0.5 * rng.next_unit());
        }
        auto s = sample_feasible(model, rng);
        const double before = model.evaluate(s, mu);
        const double after = model.evaluate(s, mu_prime);
        if (after < before - kPropertyCheckTolerance) {
            report.violations.push_back({s, mu, mu_prime, after - before, 0.0});
        }
    }
    return report;
}

namespace {

ViolationReport check_deviation_bound(const RewardModel& model, long trials, std::uint64_t seed,
                                      const std::function<double(double)>& bound_of_lambda) {
    ViolationReport report;
    report.trials = trials;
    RandomStream rng(seed);
    for (long trial = 0; trial < trials; ++trial) {
        auto mu = sample_unit_vector(model.k, rng);
        auto mu_prime = sample_unit_vector(model.k, rng);
        auto s = sample_feasible(model, rng);
        double lambda = 0.0;
        for (int i : s) lambda = std::max(lambda, std::abs(mu[i] - mu_prime[i]));
        const double deviation = std::abs(model.evaluate(s, mu) - model.evaluate(s, mu_prime));
        const double allowed = bound_of_lambda(lambda);
        if (deviation > allowed + kPropertyCheckTolerance) {
            report.violations.push_back({s, mu, mu_prime, deviation, allowed});
        }
    }
    return report;
}

}  // namespace

ViolationReport check_lipschitz(const RewardModel& model, long trials, std::uint64_t seed) {
    if (trials <= 0) throw ValidationError("check_lipschitz: trials must be > 0");
    if (!model.lipschitz_c.has_value()) {
        throw ValidationError("check_lipschitz: model declares no Lipschitz constant");
    }
    const double c = *model.lipschitz_c;
    return check_deviation_bound(model, trials, seed,
                                 [c](double lambda) { return c * lambda; });
}

ViolationReport check_bounded_smoothness(const RewardModel& model, long trials,
                                         std::uint64_t seed) {
    if (trials <= 0) throw ValidationError("check_bounded_smoothness: trials must be > 0");
    if (!model.smoothness.has_value()) {
        throw ValidationError("check_bounded_smoothness: model declares no smoothness function");
    }
    const auto& f = model.smoothness->f;
    return check_deviation_bound(model, trials, seed, f);
}

}  // namespace csucb

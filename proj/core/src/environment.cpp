#include "csucb/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "csucb/analysis.hpp"
#include "csucb/errors.hpp"

namespace csucb {

namespace {

// Purpose tags for the per-run substreams.
constexpr std::uint64_t kAvailabilityTag = 0xA7A11AB111177A65ULL;
constexpr std::uint64_t kFeedbackTag = 0xFEEDBAC4FEEDBAC4ULL;
constexpr std::uint64_t kOracleTag = 0x02AC1E0000000001ULL;
constexpr std::uint64_t kInstanceTag = 0x1257A9CE00000002ULL;

}  // namespace

RewardModel make_reward_model(const RewardSpec& spec, int k) {
    if (std::holds_alternative<UtilParams>(spec)) {
        const auto& params = std::get<UtilParams>(spec);
        if (params.k() != k) {
            throw ValidationError("reward spec: util parameter length does not match k");
        }
        return util_reward(params);
    }
    return topk_reward(std::get<TopKParams>(spec), k);
}

Oracle make_exact_oracle(const RewardSpec& spec) {
    if (std::holds_alternative<UtilParams>(spec)) {
        return make_util_oracle(std::get<UtilParams>(spec));
    }
    return make_topk_oracle(std::get<TopKParams>(spec).K);
}

AvailabilitySequence load_availability_script(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in.is_open()) {
        throw IoError("availability script: cannot open " + path);
    }
    AvailabilitySequence sequence;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::vector<int> round;
        std::string token;
        while (fields >> token) {
            int arm = 0;
            std::size_t used = 0;
            try {
                arm = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw ValidationError("availability script: line " + std::to_string(line_number) +
                                      ": cannot parse '" + token + "' as an arm index");
            }
            if (arm < 0 || arm >= k) {
                throw ValidationError("availability script: line " + std::to_string(line_number) +
                                      ": index " + std::to_string(arm) + " out of range [0," +
                                      std::to_string(k) + ")");
            }
            round.push_back(arm);
        }
        std::sort(round.begin(), round.end());
        if (std::adjacent_find(round.begin(), round.end()) != round.end()) {
            throw ValidationError("availability script: line " + std::to_string(line_number) +
                                  ": duplicate arm index");
        }
        sequence.rounds.push_back(std::move(round));
    }
    return sequence;
}

void InstanceConfig::validate() const {
    if (k < 1) throw ValidationError("config: k must be >= 1");
    if (static_cast<int>(mu.size()) != k) {
        throw ValidationError("config: mu must have k entries");
    }
    for (double m : mu) {
        if (!(m >= 0.0 && m <= 1.0)) throw ValidationError("config: mu entries must be in [0,1]");
    }
    if (availability_script.has_value()) {
        for (const auto& round : availability_script->rounds) {
            for (int i : round) {
                if (i < 0 || i >= k) {
                    throw ValidationError("config: scripted availability index out of range");
                }
            }
        }
        if (horizon > static_cast<std::int64_t>(availability_script->rounds.size())) {
            throw ValidationError("config: horizon exceeds availability script length");
        }
    } else {
        if (static_cast<int>(avail_p.size()) != k) {
            throw ValidationError("config: avail_p must have k entries (or use a script)");
        }
        for (double p : avail_p) {
            if (!(p > 0.0 && p <= 1.0)) {
                throw ValidationError("config: availability probabilities must be in (0,1]");
            }
        }
    }
    if (horizon < 1) throw ValidationError("config: horizon must be >= 1");
    if (runs < 1) throw ValidationError("config: runs must be >= 1");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw ValidationError("config: gamma must be in (0,1]");
    if (!(beta > 0.0 && beta <= 1.0)) throw ValidationError("config: beta must be in (0,1]");
    if (resample_instance && availability_script.has_value()) {
        throw ValidationError("config: resampling per run is incompatible with a scripted "
                              "availability sequence");
    }
    (void)make_reward_model(reward, k);  // parameter validation happens in the factory
}

RunRng RunRng::for_run(std::uint64_t master_seed, int run_index) {
    const std::uint64_t seed = run_seed(master_seed, static_cast<std::uint64_t>(run_index));
    RunRng rng;
    rng.availability_seed = substream(seed, kAvailabilityTag);
    rng.feedback_seed = substream(seed, kFeedbackTag);
    rng.oracle_seed = substream(seed, kOracleTag);
    rng.instance_seed = substream(seed, kInstanceTag);
    return rng;
}

std::vector<int> draw_availability(const InstanceConfig& config, std::int64_t t,
                                   const RunRng& rng) {
    if (t < 1) throw ValidationError("draw_availability: t must be >= 1");
    if (config.availability_script.has_value()) {
        const auto& rounds = config.availability_script->rounds;
        if (t > static_cast<std::int64_t>(rounds.size())) {
            throw ValidationError("draw_availability: round beyond script length");
        }
        return rounds[static_cast<std::size_t>(t - 1)];
    }
    std::vector<int> available;
    for (int i = 0; i < config.k; ++i) {
        const std::uint64_t counter =
            static_cast<std::uint64_t>(t - 1) * static_cast<std::uint64_t>(config.k) +
            static_cast<std::uint64_t>(i);
        if (u64_to_unit(splitmix_at(rng.availability_seed, counter)) < config.avail_p[i]) {
            available.push_back(i);
        }
    }
    return available;
}

Feedback draw_feedback(const SuperArm& pulled, std::span<const double> mu, std::int64_t t,
                       const RunRng& rng) {
    if (pulled.empty()) throw ValidationError("draw_feedback: pulled set is empty");
    if (t < 1) throw ValidationError("draw_feedback: t must be >= 1");
    const auto k = static_cast<std::uint64_t>(mu.size());
    Feedback feedback;
    feedback.reserve(pulled.size());
    for (int i : pulled) {
        const std::uint64_t counter = static_cast<std::uint64_t>(t - 1) * k +
                                      static_cast<std::uint64_t>(i);
        const bool hit = u64_to_unit(splitmix_at(rng.feedback_seed, counter)) < mu[i];
        feedback.emplace_back(i, hit ? 1.0 : 0.0);
    }
    return feedback;
}

RandomStream instance_stream(std::uint64_t master_seed) {
    return RandomStream(substream(master_seed, kInstanceTag));
}

InstanceConfig sample_exp_one(int k, RandomStream& rng) {
    if (k < 2) throw ValidationError("sample_exp_one: k must be >= 2");
    InstanceConfig config;
    config.k = k;
    config.mu.resize(static_cast<std::size_t>(k));
    config.avail_p.resize(static_cast<std::size_t>(k));
    for (double& m : config.mu) m = rng.next_uniform(0.3, 0.8);
    for (double& p : config.avail_p) p = rng.next_uniform(0.4, 0.9);
    return config;
}

namespace {

bool within_ten_percent(double value, double target) {
    return std::abs(value - target) <= 0.1 * target;
}

}  // namespace

InstanceConfig sample_exp_two(int k, const RewardSpec& reward, double delta_min_target,
                              std::optional<double> sigma_target, RandomStream& rng,
                              double gamma) {
    if (k < 2) throw ValidationError("sample_exp_two: k must be >= 2");
    if (!(delta_min_target > 0.0)) {
        throw ValidationError("sample_exp_two: delta_min_target must be > 0");
    }
    const RewardModel model = make_reward_model(reward, k);

    constexpr int kCandidateBudget = 10000;
    int candidates = 0;
    const double center = 0.5;

    for (int attempt = 0; candidates < kCandidateBudget; ++attempt) {
        // Two candidate shapes: spread offsets give generic near-equal
        // ladders; two-level offsets pin all positive gaps to one value
        // (the sigma = 1 family).
        std::vector<double> offsets(static_cast<std::size_t>(k));
        if (attempt % 2 == 0) {
            for (double& e : offsets) e = rng.next_uniform(-1.0, 1.0);
        } else {
            const int high = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k - 1)));
            for (int i = 0; i < k; ++i) offsets[static_cast<std::size_t>(i)] = i < high ? 0.5 : -0.5;
        }

        double scale = 0.1;
        for (int refine = 0; refine < 3 && candidates < kCandidateBudget; ++refine) {
            std::vector<double> mu(static_cast<std::size_t>(k));
            bool in_range = true;
            for (int i = 0; i < k; ++i) {
                mu[static_cast<std::size_t>(i)] = center + scale * offsets[static_cast<std::size_t>(i)];
                in_range = in_range && mu[static_cast<std::size_t>(i)] >= 0.0 &&
                           mu[static_cast<std::size_t>(i)] <= 1.0;
            }
            if (!in_range) break;
            ++candidates;
            const GapSummary gaps = instance_gaps(mu, model, gamma, AllSubsets{});
            if (!gaps.defined()) break;
            if (within_ten_percent(*gaps.delta_min, delta_min_target) &&
                (!sigma_target.has_value() || within_ten_percent(*gaps.sigma(), *sigma_target))) {
                InstanceConfig config;
                config.k = k;
                config.mu = std::move(mu);
                config.reward = reward;
                config.gamma = gamma;
                config.avail_p.resize(static_cast<std::size_t>(k));
                for (double& p : config.avail_p) p = rng.next_uniform(0.4, 0.9);
                return config;
            }
            // Gaps scale linearly with the offsets for swap-style bad sets;
            // one rescale usually lands on the target.
            scale *= delta_min_target / *gaps.delta_min;
        }
    }
    throw BudgetError("sample_exp_two: no mean vector hit delta_min=" +
                      std::to_string(delta_min_target) +
                      (sigma_target ? " with sigma=" + std::to_string(*sigma_target) : "") +
                      " within 10% after " + std::to_string(kCandidateBudget) + " candidates");
}

}  // namespace csucb

#include "csucb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "csucb/errors.hpp"
#include "csucb/policy.hpp"

namespace csucb {

void ExperimentSpec::validate() const {
    instance.validate();
    if (jobs < 1) throw ValidationError("experiment: jobs must be >= 1");
    if (instance.resample_instance && tag == ExperimentTag::Custom) {
        throw ValidationError("experiment: per-run resampling needs an exp_one or exp_two tag");
    }
    if (tag == ExperimentTag::ExpTwo && instance.resample_instance && !exp_two_targets) {
        throw ValidationError("experiment: exp_two resampling needs the gap targets");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > instance.horizon) {
            throw ValidationError("experiment: checkpoint outside [1, horizon]");
        }
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw ValidationError("experiment: checkpoints must be strictly increasing");
        }
    }
}

std::vector<std::int64_t> make_checkpoints(std::int64_t horizon) {
    if (horizon < 1) throw ValidationError("make_checkpoints: horizon must be >= 1");
    std::vector<std::int64_t> points;
    if (horizon == 1) {
        points.push_back(1);
        return points;
    }
    constexpr int kCount = 50;
    const double lo = std::log(2.0);
    const double hi = std::log(static_cast<double>(horizon));
    for (int j = 0; j < kCount; ++j) {
        const double x = lo + (hi - lo) * static_cast<double>(j) / (kCount - 1);
        const auto t = static_cast<std::int64_t>(std::llround(std::exp(x)));
        if (points.empty() || t > points.back()) points.push_back(std::min(t, horizon));
    }
    if (points.back() != horizon) points.push_back(horizon);
    return points;
}

namespace {

struct RunOutput {
    std::vector<double> checkpoint_cum;
    double max_increment = -std::numeric_limits<double>::infinity();
    std::set<std::vector<int>> realized_sets;
};

InstanceConfig resampled_instance(const ExperimentSpec& spec, const RunRng& rng) {
    RandomStream stream(rng.instance_seed);
    InstanceConfig fresh =
        spec.tag == ExperimentTag::ExpOne
            ? sample_exp_one(spec.instance.k, stream)
            : sample_exp_two(spec.instance.k, spec.instance.reward,
                             spec.exp_two_targets->delta_min, spec.exp_two_targets->sigma,
                             stream, spec.instance.gamma);
    InstanceConfig instance = spec.instance;
    instance.mu = std::move(fresh.mu);
    instance.avail_p = std::move(fresh.avail_p);
    return instance;
}

RunOutput simulate_run(const ExperimentSpec& spec, const RewardModel& model,
                       const Oracle& exact_oracle, int run_index, bool collect_realized,
                       std::vector<double>& curve_sum) {
    const RunRng rng = RunRng::for_run(spec.instance.master_seed, run_index);
    const InstanceConfig instance =
        spec.instance.resample_instance ? resampled_instance(spec, rng) : spec.instance;

    Oracle oracle = exact_oracle;
    if (instance.beta < 1.0) {
        oracle = degrade(exact_oracle, OracleSpec{instance.gamma, instance.beta}, model,
                         rng.oracle_seed);
    }

    PolicyState policy(instance.k);
    RegretLedger ledger;
    RunOutput out;

    for (std::int64_t t = 1; t <= instance.horizon; ++t) {
        std::vector<int> available = draw_availability(instance, t, rng);
        if (collect_realized && !available.empty()) out.realized_sets.insert(available);
        if (available.empty()) {
            record_round(ledger, available, SuperArm{}, model, instance.mu, instance.gamma,
                         instance.beta);
            continue;
        }
        const SuperArm pulled = step(policy, available, oracle, model);
        const Feedback feedback = draw_feedback(pulled, instance.mu, t, rng);
        update(policy, pulled, feedback);
        record_round(ledger, available, pulled, model, instance.mu, instance.gamma,
                     instance.beta);
    }

    const auto& cumulative = ledger.cumulative();
    for (std::size_t i = 0; i < cumulative.size(); ++i) curve_sum[i] += cumulative[i];
    out.checkpoint_cum.reserve(spec.checkpoints.size());
    for (std::int64_t cp : spec.checkpoints) {
        out.checkpoint_cum.push_back(cumulative[static_cast<std::size_t>(cp - 1)]);
    }
    out.max_increment = ledger.max_increment();
    return out;
}

std::vector<double> evaluate_bound(const std::vector<std::int64_t>& checkpoints,
                                   const std::function<double(double)>& bound) {
    std::vector<double> values;
    values.reserve(checkpoints.size());
    for (std::int64_t t : checkpoints) {
        values.push_back(t >= 2 ? bound(static_cast<double>(t))
                                : std::numeric_limits<double>::quiet_NaN());
    }
    return values;
}

void format_cell(std::string& line, double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    line += buffer;
}

}  // namespace

AggregateResult run_experiment(const ExperimentSpec& raw_spec) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentSpec spec = raw_spec;
    if (spec.checkpoints.empty()) spec.checkpoints = make_checkpoints(spec.instance.horizon);
    spec.validate();

    const InstanceConfig& instance = spec.instance;
    const RewardModel model = make_reward_model(instance.reward, instance.k);
    const Oracle exact_oracle = make_exact_oracle(instance.reward);

    AggregateResult result;
    result.checkpoints = spec.checkpoints;
    result.runs = instance.runs;
    result.master_seed = instance.master_seed;
    result.config_digest = experiment_digest(spec);

    // Exact gaps are available up front for small k; larger instances fall
    // back to the realized availability family (a lower-bound estimate).
    bool collect_realized = false;
    if (instance.k <= 15 && !instance.resample_instance) {
        result.gaps = instance_gaps(instance.mu, model, instance.gamma, AllSubsets{});
        result.gap_scope = result.gaps.defined() ? GapScope::Exact : GapScope::Undefined;
    } else if (!instance.resample_instance && instance.k <= 32) {
        collect_realized = true;
    }

    const int runs = instance.runs;
    const int buckets = std::max(1, std::min(spec.jobs, runs));
    const auto horizon = static_cast<std::size_t>(instance.horizon);
    std::vector<RunOutput> outputs(static_cast<std::size_t>(runs));
    std::vector<std::vector<double>> bucket_sums(static_cast<std::size_t>(buckets),
                                                 std::vector<double>(horizon, 0.0));

    enum class FailureKind { None, Validation, Budget, Io, Other };
    std::mutex failure_mutex;
    FailureKind failure_kind = FailureKind::None;
    std::string failure;
    auto record_failure = [&](FailureKind kind, int r, const char* what) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (failure.empty()) {
            failure_kind = kind;
            failure = "experiment aborted at run " + std::to_string(r) + " (master_seed " +
                      std::to_string(instance.master_seed) + "): " + what;
        }
    };
    auto worker = [&](int bucket) {
        for (int r = bucket; r < runs; r += buckets) {
            try {
                outputs[static_cast<std::size_t>(r)] =
                    simulate_run(spec, model, exact_oracle, r, collect_realized,
                                 bucket_sums[static_cast<std::size_t>(bucket)]);
            } catch (const ValidationError& e) {
                record_failure(FailureKind::Validation, r, e.what());
                return;
            } catch (const BudgetError& e) {
                record_failure(FailureKind::Budget, r, e.what());
                return;
            } catch (const IoError& e) {
                record_failure(FailureKind::Io, r, e.what());
                return;
            } catch (const std::exception& e) {
                record_failure(FailureKind::Other, r, e.what());
                return;
            }
        }
    };
    if (buckets == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(buckets));
        for (int b = 0; b < buckets; ++b) threads.emplace_back(worker, b);
        for (auto& t : threads) t.join();
    }
    switch (failure_kind) {
        case FailureKind::None:
            break;
        case FailureKind::Budget:
            throw BudgetError(failure);
        case FailureKind::Io:
            throw IoError(failure);
        case FailureKind::Validation:
        case FailureKind::Other:
            throw ValidationError(failure);
    }

    // Aggregation is single-threaded and in fixed run order, so repeated
    // invocations reproduce results bit for bit.
    result.mean_cumulative.assign(horizon, 0.0);
    for (const auto& bucket : bucket_sums) {
        for (std::size_t i = 0; i < horizon; ++i) result.mean_cumulative[i] += bucket[i];
    }
    for (double& v : result.mean_cumulative) v /= runs;

    const std::size_t n_checkpoints = spec.checkpoints.size();
    result.per_run_checkpoint_regret.reserve(static_cast<std::size_t>(runs));
    result.max_increment = -std::numeric_limits<double>::infinity();
    for (const auto& out : outputs) {
        result.per_run_checkpoint_regret.push_back(out.checkpoint_cum);
        result.max_increment = std::max(result.max_increment, out.max_increment);
    }
    result.regret_mean.assign(n_checkpoints, 0.0);
    result.regret_std.assign(n_checkpoints, 0.0);
    for (std::size_t c = 0; c < n_checkpoints; ++c) {
        double sum = 0.0;
        for (const auto& run : result.per_run_checkpoint_regret) sum += run[c];
        const double mean = sum / runs;
        result.regret_mean[c] = mean;
        if (runs > 1) {
            double ss = 0.0;
            for (const auto& run : result.per_run_checkpoint_regret) {
                const double d = run[c] - mean;
                ss += d * d;
            }
            result.regret_std[c] = std::sqrt(ss / (runs - 1));
        }
    }

    if (collect_realized) {
        std::set<std::vector<int>> realized;
        for (auto& out : outputs) realized.merge(out.realized_sets);
        bool enumerable = true;
        for (const auto& s : realized) {
            if (s.size() > 20) {
                enumerable = false;
                break;
            }
        }
        if (enumerable) {
            std::vector<std::vector<int>> family(realized.begin(), realized.end());
            result.gaps = instance_gaps(instance.mu, model, instance.gamma, family);
            result.gap_scope =
                result.gaps.defined() ? GapScope::RealizedLowerBound : GapScope::Undefined;
        }
    }

    // Bound overlays, where the instance supplies the needed structure.
    const int k = instance.k;
    if (model.lipschitz_c) {
        const double c = *model.lipschitz_c;
        result.bound_thm3 = evaluate_bound(
            spec.checkpoints, [&](double t) { return bound_thm3(k, c, t); });
        if (result.gaps.defined()) {
            const double sigma = *result.gaps.sigma();
            const double delta_min = *result.gaps.delta_min;
            result.bound_thm1 = evaluate_bound(spec.checkpoints, [&](double t) {
                return bound_thm1(k, c, sigma, delta_min, instance.beta, t);
            });
            result.bound_thm2 = evaluate_bound(
                spec.checkpoints, [&](double t) { return bound_thm2(k, c, sigma, t); });
        }
    }
    if (model.smoothness && result.gaps.defined()) {
        const double delta_min = *result.gaps.delta_min;
        const double delta_max = *result.gaps.delta_max;
        const auto& f_inverse = model.smoothness->f_inverse;
        result.bound_thm4 = evaluate_bound(spec.checkpoints, [&](double t) {
            return bound_thm4(k, delta_min, delta_max, f_inverse, t);
        });
    }

    if (!spec.output_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(spec.output_dir, ec);
        if (ec) {
            throw IoError("cannot create output directory " + spec.output_dir + ": " +
                          ec.message());
        }
        const auto base = std::filesystem::path(spec.output_dir) / spec.output_stem;
        write_csv(result, (base.string() + ".csv"));
        render_chart(result, (base.string() + ".svg"), spec.log_time_axis);
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string csv_to_string(const AggregateResult& result) {
    std::string out = "t,regret_mean,regret_std,bound_thm1,bound_thm2,bound_thm3,bound_thm4\n";
    auto bound_cell = [](std::string& line, const std::vector<double>& bound, std::size_t i) {
        line += ',';
        if (i < bound.size() && !std::isnan(bound[i])) format_cell(line, bound[i]);
    };
    for (std::size_t i = 0; i < result.checkpoints.size(); ++i) {
        std::string line = std::to_string(result.checkpoints[i]);
        line += ',';
        format_cell(line, result.regret_mean[i]);
        line += ',';
        format_cell(line, result.regret_std[i]);
        bound_cell(line, result.bound_thm1, i);
        bound_cell(line, result.bound_thm2, i);
        bound_cell(line, result.bound_thm3, i);
        bound_cell(line, result.bound_thm4, i);
        line += '\n';
        out += line;
    }
    return out;
}

void write_csv(const AggregateResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw IoError("cannot open " + path + " for writing");
    const std::string body = csv_to_string(result);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out.good()) throw IoError("failed while writing " + path);
}

}  // namespace csucb

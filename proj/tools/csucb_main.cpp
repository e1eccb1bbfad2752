// Command-line harness around the csucb library: replicated experiment runs,
// instance gap reports, closed-form bound curves, and reward-model property
// checks.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "csucb/analysis.hpp"
#include "csucb/environment.hpp"
#include "csucb/errors.hpp"
#include "csucb/harness.hpp"
#include "csucb/property_checks.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> horizon;
    std::optional<int> runs;
    std::optional<int> jobs;
    std::optional<double> gamma;
    std::optional<double> beta;
    std::optional<std::string> availability_script;
    bool resample_instance = false;
    std::string out_dir;
};

void add_config_flags(CLI::App* cmd, CommonFlags& flags, bool with_run_flags) {
    cmd->add_option("--config", flags.config_path, "JSON experiment config")->required();
    cmd->add_option("--seed", flags.seed, "override master seed");
    cmd->add_option("--gamma", flags.gamma, "override oracle approximation factor");
    cmd->add_option("--beta", flags.beta, "override oracle success probability");
    cmd->add_option("--availability-script", flags.availability_script,
                    "override availability with a script file (one round per line)");
    if (with_run_flags) {
        cmd->add_option("--horizon", flags.horizon, "override time horizon T");
        cmd->add_option("--runs", flags.runs, "override replicate count");
        cmd->add_option("--jobs", flags.jobs, "worker threads for replicate fan-out");
        cmd->add_flag("--resample-instance", flags.resample_instance,
                      "draw a fresh instance per replicate (exp_one / exp_two)");
    }
}

csucb::ExperimentSpec load_spec(const CommonFlags& flags) {
    csucb::ConfigOverrides overrides;
    overrides.master_seed = flags.seed;
    overrides.horizon = flags.horizon;
    overrides.runs = flags.runs;
    overrides.jobs = flags.jobs;
    overrides.gamma = flags.gamma;
    overrides.beta = flags.beta;
    overrides.availability_script = flags.availability_script;
    if (flags.resample_instance) overrides.resample_instance = true;
    if (!flags.out_dir.empty()) overrides.output_dir = flags.out_dir;
    return csucb::load_experiment_spec(flags.config_path, overrides);
}

void print_gap_summary(const csucb::GapSummary& gaps, csucb::GapScope scope, int verbosity) {
    if (!gaps.defined()) {
        std::printf("gaps: undefined (no availability set has a bad super-arm)\n");
        return;
    }
    const char* scope_label = scope == csucb::GapScope::Exact
                                  ? "exact over all availability sets"
                                  : "lower-bound estimate over realized availability sets";
    std::printf("delta_min = %.12g\n", *gaps.delta_min);
    std::printf("delta_max = %.12g\n", *gaps.delta_max);
    std::printf("sigma     = %.12g   (%s)\n", *gaps.sigma(), scope_label);
    if (verbosity >= 1) {
        std::printf("per-availability-set gaps:\n");
        for (const auto& row : gaps.table) {
            std::string members;
            for (std::size_t i = 0; i < row.available.size(); ++i) {
                if (i) members += ",";
                members += std::to_string(row.available[i]);
            }
            std::printf("  A={%s}: delta_min=%.12g delta_max=%.12g\n", members.c_str(),
                        row.delta_min, row.delta_max);
        }
    }
}

int cmd_run(const CommonFlags& flags) {
    csucb::ExperimentSpec spec = load_spec(flags);
    const csucb::AggregateResult result = csucb::run_experiment(spec);
    std::printf("runs=%d horizon=%lld seed=%llu digest=%s wall=%.2fs\n", result.runs,
                static_cast<long long>(spec.instance.horizon),
                static_cast<unsigned long long>(result.master_seed),
                result.config_digest.c_str(), result.wall_seconds);
    print_gap_summary(result.gaps, result.gap_scope, 0);
    std::printf("final mean cumulative regret: %.6f\n", result.regret_mean.back());
    if (!spec.output_dir.empty()) {
        std::printf("wrote %s/%s.csv and .svg\n", spec.output_dir.c_str(),
                    spec.output_stem.c_str());
    }
    return 0;
}

int cmd_gaps(const CommonFlags& flags, int verbosity) {
    csucb::ExperimentSpec spec = load_spec(flags);
    const csucb::InstanceConfig& instance = spec.instance;
    const csucb::RewardModel model = csucb::make_reward_model(instance.reward, instance.k);

    csucb::GapSummary gaps;
    csucb::GapScope scope = csucb::GapScope::Undefined;
    if (instance.k <= 15) {
        gaps = csucb::instance_gaps(instance.mu, model, instance.gamma, csucb::AllSubsets{});
        scope = csucb::GapScope::Exact;
    } else if (instance.availability_script.has_value()) {
        gaps = csucb::instance_gaps(instance.mu, model, instance.gamma,
                                    instance.availability_script->rounds);
        scope = csucb::GapScope::RealizedLowerBound;
    } else {
        throw csucb::BudgetError(
            "gap enumeration over all availability sets needs k <= 15; for larger instances "
            "provide --availability-script so gaps can be taken over the realized sets");
    }
    print_gap_summary(gaps, scope, verbosity);
    return 0;
}

struct BoundFlags {
    int k = 1;
    double lipschitz_c = 1.0;
    std::optional<double> sigma;
    std::optional<double> delta_min;
    std::optional<double> delta_max;
    double beta = 1.0;
    std::int64_t horizon = 100000;
    std::int64_t t_min = 2;
    int points = 50;
    std::string out_file;
};

int cmd_bounds(const BoundFlags& flags) {
    if (flags.t_min < 2 || flags.horizon <= flags.t_min) {
        throw csucb::ValidationError("bounds: need 2 <= t-min < horizon");
    }
    if (flags.points < 2) throw csucb::ValidationError("bounds: need at least 2 grid points");

    std::vector<std::int64_t> grid;
    const double lo = std::log(static_cast<double>(flags.t_min));
    const double hi = std::log(static_cast<double>(flags.horizon));
    for (int j = 0; j < flags.points; ++j) {
        const double x = lo + (hi - lo) * static_cast<double>(j) / (flags.points - 1);
        const auto t = static_cast<std::int64_t>(std::llround(std::exp(x)));
        if (grid.empty() || t > grid.back()) grid.push_back(std::min(t, flags.horizon));
    }

    std::string csv = "t,bound_thm1,bound_thm2,bound_thm3,bound_thm4\n";
    const bool have_gaps = flags.sigma && flags.delta_min;
    const bool have_thm4 = flags.delta_min && flags.delta_max;
    for (std::int64_t t : grid) {
        char cell[64];
        csv += std::to_string(t);
        csv += ',';
        if (have_gaps) {
            std::snprintf(cell, sizeof(cell), "%.17g",
                          csucb::bound_thm1(flags.k, flags.lipschitz_c, *flags.sigma,
                                            *flags.delta_min, flags.beta,
                                            static_cast<double>(t)));
            csv += cell;
        }
        csv += ',';
        if (flags.sigma) {
            std::snprintf(cell, sizeof(cell), "%.17g",
                          csucb::bound_thm2(flags.k, flags.lipschitz_c, *flags.sigma,
                                            static_cast<double>(t)));
            csv += cell;
        }
        csv += ',';
        std::snprintf(cell, sizeof(cell), "%.17g",
                      csucb::bound_thm3(flags.k, flags.lipschitz_c, static_cast<double>(t)));
        csv += cell;
        csv += ',';
        if (have_thm4) {
            const double c = flags.lipschitz_c;
            std::snprintf(cell, sizeof(cell), "%.17g",
                          csucb::bound_thm4(flags.k, *flags.delta_min, *flags.delta_max,
                                            [c](double y) { return y / c; },
                                            static_cast<double>(t)));
            csv += cell;
        }
        csv += '\n';
    }

    if (flags.out_file.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        std::ofstream out(flags.out_file, std::ios::binary);
        if (!out.is_open()) throw csucb::IoError("cannot open " + flags.out_file);
        out << csv;
        if (!out.good()) throw csucb::IoError("failed while writing " + flags.out_file);
    }
    return 0;
}

int cmd_check_smoothness(const CommonFlags& flags, long trials, std::uint64_t check_seed) {
    csucb::ExperimentSpec spec = load_spec(flags);
    const csucb::RewardModel model =
        csucb::make_reward_model(spec.instance.reward, spec.instance.k);

    bool clean = true;
    auto report = [&](const char* name, const csucb::ViolationReport& r) {
        std::printf("%-20s %s (%zu violation(s) in %ld trials)\n", name,
                    r.passed() ? "pass" : "FAIL", r.violations.size(), r.trials);
        if (!r.passed()) {
            clean = false;
            const auto& v = r.violations.front();
            std::printf("  first counterexample: S=%s observed=%.12g allowed=%.12g\n",
                        v.super_arm.to_string().c_str(), v.observed, v.allowed);
        }
    };
    report("monotonicity", csucb::check_monotonicity(model, trials, check_seed));
    report("lipschitz", csucb::check_lipschitz(model, trials, check_seed + 1));
    if (model.smoothness) {
        report("bounded-smoothness", csucb::check_bounded_smoothness(model, trials, check_seed + 2));
    }
    return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sleeping combinatorial bandit (CS-UCB) simulation harness"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    auto* run = app.add_subcommand("run", "execute a replicated experiment");
    add_config_flags(run, run_flags, true);
    run->add_option("--out", run_flags.out_dir, "output directory for CSV/SVG")
        ->default_val("csucb-out");

    CommonFlags gap_flags;
    int gap_verbosity = 0;
    auto* gaps = app.add_subcommand("gaps", "enumerate instance suboptimality gaps");
    add_config_flags(gaps, gap_flags, false);
    gaps->add_flag("-v,--verbose", gap_verbosity, "also print the per-availability-set table");

    BoundFlags bound_flags;
    auto* bounds = app.add_subcommand("bounds", "tabulate closed-form regret bound curves");
    bounds->add_option("--k", bound_flags.k, "number of base arms")->required();
    bounds->add_option("--lipschitz", bound_flags.lipschitz_c, "Lipschitz constant C")
        ->default_val(1.0);
    bounds->add_option("--sigma", bound_flags.sigma, "gap ratio delta_max/delta_min");
    bounds->add_option("--delta-min", bound_flags.delta_min, "minimum suboptimality gap");
    bounds->add_option("--delta-max", bound_flags.delta_max, "maximum suboptimality gap");
    bounds->add_option("--beta", bound_flags.beta, "oracle success probability")->default_val(1.0);
    bounds->add_option("--horizon", bound_flags.horizon, "largest T in the grid")
        ->default_val(100000);
    bounds->add_option("--t-min", bound_flags.t_min, "smallest T in the grid")->default_val(2);
    bounds->add_option("--points", bound_flags.points, "grid size")->default_val(50);
    bounds->add_option("--out", bound_flags.out_file, "CSV output file (stdout when omitted)");

    CommonFlags check_flags;
    long check_trials = 10000;
    std::uint64_t check_seed = 7;
    auto* check = app.add_subcommand("check-smoothness",
                                     "run the reward-model property checkers");
    add_config_flags(check, check_flags, false);
    check->add_option("--trials", check_trials, "trials per property")->default_val(10000);
    check->add_option("--check-seed", check_seed, "sampler seed")->default_val(7);

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_flags);
        if (gaps->parsed()) return cmd_gaps(gap_flags, gap_verbosity);
        if (bounds->parsed()) return cmd_bounds(bound_flags);
        if (check->parsed()) return cmd_check_smoothness(check_flags, check_trials, check_seed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const csucb::ValidationError& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 2;
    } catch (const csucb::BudgetError& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return 3;
    } catch (const csucb::IoError& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csucb/analysis.hpp"
#include "csucb/environment.hpp"

namespace csucb {

enum class ExperimentTag { ExpOne, ExpTwo, Custom };

struct ExpTwoTargets {
    double delta_min = 0.01;
    std::optional<double> sigma;
};

// A full experiment: the instance, where it came from, and how to report it.
struct ExperimentSpec {
    InstanceConfig instance;
    ExperimentTag tag = ExperimentTag::Custom;
    // Retained so per-run resampling can regenerate ExpTwo instances.
    std::optional<ExpTwoTargets> exp_two_targets;
    // Sorted rounds in [1, horizon] at which cumulative regret is reported.
    std::vector<std::int64_t> checkpoints;
    std::string output_dir;  // empty: nothing is written
    std::string output_stem = "experiment";
    int jobs = 1;
    bool log_time_axis = true;

    void validate() const;
};

// 50 geometrically spaced rounds plus the horizon itself.
std::vector<std::int64_t> make_checkpoints(std::int64_t horizon);

enum class GapScope { Exact, RealizedLowerBound, Undefined };

struct AggregateResult {
    std::vector<std::int64_t> checkpoints;
    std::vector<double> regret_mean;  // mean cumulative sleeping regret per checkpoint
    std::vector<double> regret_std;   // sample standard deviation across runs
    // Bound overlays per checkpoint; empty vector when the bound does not
    // apply to the instance. NaN entries mark rounds below the bound's domain.
    std::vector<double> bound_thm1;
    std::vector<double> bound_thm2;
    std::vector<double> bound_thm3;
    std::vector<double> bound_thm4;
    GapSummary gaps;
    GapScope gap_scope = GapScope::Undefined;
    // Full-horizon mean cumulative regret (average of the per-run curves).
    std::vector<double> mean_cumulative;
    // Per-run cumulative regret at each checkpoint, [run][checkpoint].
    std::vector<std::vector<double>> per_run_checkpoint_regret;
    double max_increment = 0.0;  // largest single-round increment over all runs
    int runs = 0;
    std::uint64_t master_seed = 0;
    std::string config_digest;
    double wall_seconds = 0.0;
};

// Runs the replicated simulation, aggregates the curves, evaluates the
// applicable bound overlays, and writes <stem>.csv / <stem>.svg under the
// output directory when one is set.
AggregateResult run_experiment(const ExperimentSpec& spec);

// Fixed CSV schema: t,regret_mean,regret_std,bound_thm1,...,bound_thm4 with
// empty cells for inapplicable bounds; UTF-8, LF line endings.
void write_csv(const AggregateResult& result, const std::string& path);
std::string csv_to_string(const AggregateResult& result);

// Static chart: mean-regret line, +-1 std band, dashed bound overlays.
std::string render_chart_svg(const AggregateResult& result, bool log_time_axis);
void render_chart(const AggregateResult& result, const std::string& path,
                  bool log_time_axis = true);

// CLI flag overrides applied to a config file before materialization.
struct ConfigOverrides {
    std::optional<std::uint64_t> master_seed;
    std::optional<std::int64_t> horizon;
    std::optional<int> runs;
    std::optional<int> jobs;
    std::optional<double> gamma;
    std::optional<double> beta;
    std::optional<std::string> availability_script;
    std::optional<bool> resample_instance;
    std::optional<std::string> output_dir;
};

// Loads a JSON experiment config (schema documented in the README) and
// materializes generated instances (exp_one / exp_two) deterministically
// from the master seed.
ExperimentSpec load_experiment_spec(const std::string& path,
                                    const ConfigOverrides& overrides = {});

// Stable digest of the materialized instance, for result metadata.
std::string experiment_digest(const ExperimentSpec& spec);

}  // namespace csucb

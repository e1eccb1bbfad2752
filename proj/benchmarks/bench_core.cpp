#include <benchmark/benchmark.h>

#include "csucb/analysis.hpp"
#include "csucb/environment.hpp"
#include "csucb/harness.hpp"
#include "csucb/oracle.hpp"
#include "csucb/policy.hpp"

namespace {

using namespace csucb;

InstanceConfig bench_instance(int k, int cap) {
    RandomStream stream(1717);
    InstanceConfig config = sample_exp_one(k, stream);
    config.reward = TopKParams{cap};
    config.horizon = 4096;
    config.runs = 1;
    config.master_seed = 99;
    return config;
}

// One full policy round: availability draw, selection, feedback, update,
// regret accounting.
void BM_PolicyRound(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const InstanceConfig config = bench_instance(k, 3);
    const RewardModel model = make_reward_model(config.reward, k);
    const Oracle oracle = make_exact_oracle(config.reward);
    const RunRng rng = RunRng::for_run(config.master_seed, 0);

    PolicyState policy(k);
    RegretLedger ledger;
    std::int64_t t = 1;
    for (auto _ : state) {
        const auto available = draw_availability(config, t, rng);
        if (!available.empty()) {
            const SuperArm pulled = step(policy, available, oracle, model);
            update(policy, pulled, draw_feedback(pulled, config.mu, t, rng));
            record_round(ledger, available, pulled, model, config.mu, 1.0, 1.0);
        } else {
            record_round(ledger, available, SuperArm{}, model, config.mu, 1.0, 1.0);
        }
        t = t % config.horizon + 1;
        benchmark::DoNotOptimize(ledger.total());
    }
}
BENCHMARK(BM_PolicyRound)->Arg(8)->Arg(16);

void BM_TopKOracle(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    RandomStream stream(5);
    std::vector<double> weights(static_cast<std::size_t>(k));
    for (double& w : weights) w = stream.next_unit();
    const auto available = all_arms(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(topk_oracle(available, weights, 3));
    }
}
BENCHMARK(BM_TopKOracle)->Arg(8)->Arg(32);

void BM_BruteForceOracle(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const RewardModel model = topk_reward(TopKParams{3}, k);
    RandomStream stream(6);
    std::vector<double> weights(static_cast<std::size_t>(k));
    for (double& w : weights) w = stream.next_unit();
    const auto available = all_arms(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_oracle(available, weights, model));
    }
}
BENCHMARK(BM_BruteForceOracle)->Arg(8)->Arg(12)->Arg(16);

void BM_InstanceGaps(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const RewardModel model = topk_reward(TopKParams{3}, k);
    RandomStream stream(7);
    std::vector<double> mu(static_cast<std::size_t>(k));
    for (double& m : mu) m = stream.next_unit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(instance_gaps(mu, model, 1.0, AllSubsets{}));
    }
}
BENCHMARK(BM_InstanceGaps)->Arg(8)->Arg(10)->Arg(12);

void BM_RunExperiment(benchmark::State& state) {
    ExperimentSpec spec;
    spec.instance = bench_instance(8, 3);
    spec.instance.horizon = 10000;
    spec.instance.runs = 4;
    spec.jobs = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(spec));
    }
}
BENCHMARK(BM_RunExperiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "regrank/experiment.hpp"
#include "regrank/generators.hpp"
#include "regrank/markov.hpp"
#include "regrank/rank.hpp"
#include "regrank/regularize.hpp"

using namespace regrank;

static void BM_EmpiricalMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = scores_linear(n);
    const auto mu = uniform_mu(n);
    const auto data = sample_comparisons(w, mu, 10 * n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(empirical_transition_matrix(data));
    }
}
BENCHMARK(BM_EmpiricalMatrix)->Arg(100)->Arg(400)->Arg(1600);

static void BM_PowerIteration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = scores_linear(n);
    const auto mu = uniform_mu(n);
    const auto q = true_transition_matrix(w, mu);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stationary_distribution(q));
    }
}
BENCHMARK(BM_PowerIteration)->Arg(100)->Arg(400)->Arg(1600);

static void BM_DiffusionRegularizer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = generate_experiment_a(7, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diffusion_regularizer(g.features, 0.25));
    }
}
BENCHMARK(BM_DiffusionRegularizer)->Arg(100)->Arg(400)->Arg(1600);

static void BM_LambdaRankCentrality(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = scores_linear(n);
    const auto mu = uniform_mu(n);
    const auto data = sample_comparisons(w, mu, 5 * n, 3);
    const auto d = lambda_regularizer(n, lambda_schedule(1.0 / 6, data.size()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(regularized_rank_centrality(data, d));
    }
}
BENCHMARK(BM_LambdaRankCentrality)->Arg(100)->Arg(400);

static void BM_MleGradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = scores_linear(n);
    const auto mu = uniform_mu(n);
    const auto data = sample_comparisons(w, mu, 20 * n, 9);
    const Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mle_objective_and_gradient(v, data, 0.1));
    }
}
BENCHMARK(BM_MleGradient)->Arg(100)->Arg(400)->Arg(1600);

BENCHMARK_MAIN();

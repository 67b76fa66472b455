#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regrank/io.hpp"
#include "regrank/metrics.hpp"
#include "regrank/rank.hpp"
#include "regrank/types.hpp"

namespace regrank {

struct AlgorithmSpec {
    enum class Kind { RankCentrality, LambdaRc, DiffusionRc, DecayedDiffusionRc, BtlMle };

    Kind kind = Kind::RankCentrality;
    double eta = 1.0 / 6.0;   // lambda-rc: lambda = min(eta / sqrt(m), 1)
    double sigma = 0.25;      // diffusion kinds
    MleConfig mle;

    bool needs_features() const;
    std::string name() const;
    std::string params() const;
};

struct TrialOutcome {
    std::string algorithm;
    std::string params;
    MetricRow metrics;
};

/// Draws one comparison dataset and evaluates every algorithm on it.
/// Algorithms that fail with NotErgodicError are scored against a uniform
/// fallback and flagged failed. Constant estimates record Kendall tau 0.
std::vector<TrialOutcome> run_trial(const BtlScores& truth, const FeatureSet* features,
                                    const SamplingDistribution& mu, long long m,
                                    const std::vector<AlgorithmSpec>& algorithms,
                                    std::uint64_t seed, double test_fraction = 0.0);

/// Uniformly random record-level split; train gets ceil(m * (1 - f)) records.
std::pair<ComparisonDataset, ComparisonDataset> split_dataset(const ComparisonDataset& data,
                                                              double test_fraction,
                                                              std::uint64_t seed);

struct SweepOutput {
    std::vector<SweepRow> raw;
    std::vector<AggregateRow> aggregates;
    std::vector<DensityRow> density;
};

/// Full protocol: for each m in the grid, `repeats` trials with per-trial
/// seeds base_seed + trial_index, all algorithms sharing each trial's
/// dataset; emits raw rows, per-(m, algorithm) mean and standard error, and
/// a post-hoc best-of-grid row per algorithm kind with a hyperparameter grid.
SweepOutput run_sweep(const RunConfig& config);

}  // namespace regrank

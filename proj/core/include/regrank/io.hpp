#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regrank/types.hpp"

namespace regrank {

/// Comparisons CSV: header `i,j,y`, 0-indexed items, y in {0,1}. Rows with
/// i > j are re-canonicalized by swapping and flipping y. n is inferred as
/// 1 + max index unless n_override > 0.
ComparisonDataset read_comparisons(const std::string& path, int n_override = 0);
void write_comparisons(const std::string& path, const ComparisonDataset& data);

/// Features CSV: header `id,f0,f1,...`; ids must cover 0..n-1 exactly once.
FeatureSet read_features(const std::string& path);
void write_features(const std::string& path, const FeatureSet& features);

/// Scores CSV: `id,score,rank` with scores at 17 significant digits;
/// rank 0 is the highest score. Byte output is deterministic.
void write_scores(const std::string& path, const RankingResult& result);
Eigen::VectorXd read_scores(const std::string& path);

struct SweepRow {
    long long m;
    int trial;
    std::string algorithm;
    std::string params;
    std::optional<double> kendall_tau;
    std::optional<double> l2_rel_err;
    std::optional<double> test_err;
};

/// Sweep CSV: `m,trial,algorithm,params,kendall_tau,l2_rel_err,test_err`
/// with empty cells for unpopulated metrics. Caller supplies row order.
void write_sweep(const std::string& path, const std::vector<SweepRow>& rows);

struct AggregateRow {
    long long m;
    std::string algorithm;
    std::string params;
    int trials;
    double kendall_tau_mean, kendall_tau_stderr;
    std::optional<double> l2_rel_err_mean, l2_rel_err_stderr;
    std::optional<double> test_err_mean, test_err_stderr;
};

void write_aggregates(const std::string& path, const std::vector<AggregateRow>& rows);

struct DensityRow {
    long long m;
    std::string matrix;  // "qhat" or "qhat_d"
    int t;
    double zero_fraction;
};

void write_density(const std::string& path, const std::vector<DensityRow>& rows);

/// Sweep configuration: a flat `key = value` document ('#' starts a
/// comment). Unknown keys are errors. See the README for the key list.
struct RunConfig {
    int version = 1;
    std::uint64_t seed = 0;
    int n = 0;  // 0 means the generator's default
    std::string generator = "random";  // random|linear|exp-a|exp-b|clustered
    std::vector<long long> m_grid;
    int repeats = 40;
    double test_fraction = 0.0;
    std::vector<std::string> algorithms;  // rc|lambda-rc|diffusion-rc|decayed-diffusion-rc|mle
    std::vector<double> eta_grid = {1.0 / 24, 1.0 / 12, 1.0 / 6, 1.0 / 3, 1.0};
    std::vector<double> sigma_grid = {0.015625, 0.03125, 0.0625, 0.125, 0.25, 0.5, 1.0};
    double mle_l2 = 0.1;
    int clusters = 10;
    int cluster_size = 10;
    double separation = 1000.0;
    int power_density_t = 0;  // 0 disables the matrix-power density report
    std::string output;       // path prefix for the emitted CSV files

    void validate() const;
};

RunConfig read_run_config(const std::string& path);

}  // namespace regrank

#pragma once

#include <cstdint>

#include "regrank/types.hpp"

namespace regrank {

/// Uniform mass 1/C(n,2) on every unordered pair.
SamplingDistribution uniform_mu(int n);

/// Draws m i.i.d. comparisons: pair (i, j) with probability mu[i][j], then
/// outcome y ~ Bernoulli(w_j / (w_i + w_j)). Deterministic given seed.
ComparisonDataset sample_comparisons(const BtlScores& w, const SamplingDistribution& mu,
                                     long long m, std::uint64_t seed);

/// w_i proportional to exp(v_i) with v_i ~ Uniform[0, 5] i.i.d.
BtlScores scores_random_exp(int n, std::uint64_t seed);

/// w_i proportional to i + 1 (raw scores 1..n).
BtlScores scores_linear(int n);

struct FeaturedScores {
    FeatureSet features;
    BtlScores scores;
};

/// Planar features x_i ~ Uniform([0, 4]^2) with scores
/// w_i = sum_{h=1,2} exp(cos(5 w_h.x_i)) + sum_{h=3,4} exp(w_h.x_i / 10),
/// where the four direction vectors have i.i.d. standard normal entries.
FeaturedScores generate_experiment_a(std::uint64_t seed, int n = 1600);

/// Scalar features x_i ~ Uniform[0, 4] with scores w_i = exp(cos(5 w x_i))
/// for a single standard normal w.
FeaturedScores generate_experiment_b(std::uint64_t seed, int n = 1000);

/// Items in tight clusters: cluster centers 0, s, 2s, ... on a line, every
/// item in a cluster shares its center as feature vector and the cluster's
/// score. One random score per cluster (exp of Uniform[0, 5]).
FeaturedScores generate_clustered(int n_clusters, int cluster_size, double separation,
                                  std::uint64_t seed);

}  // namespace regrank

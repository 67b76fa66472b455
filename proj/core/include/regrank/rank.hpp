#pragma once

#include <utility>

#include "regrank/markov.hpp"
#include "regrank/regularize.hpp"
#include "regrank/types.hpp"

namespace regrank {

struct MleConfig {
    double l2_strength = 0.1;  // coefficient on ||v||^2
    double step_size = 0.1;
    int max_iter = 10000;
    double grad_tol = 1e-8;

    void validate() const;
};

/// Stationary distribution of the empirical chain Q-hat. Throws
/// NotErgodicError when the comparison graph does not make Q-hat ergodic.
RankingResult rank_centrality(const ComparisonDataset& data);

/// Stationary distribution of Q-hat D. With the lambda regularizer
/// (lambda > 0) this succeeds on every input, including m = 0.
RankingResult regularized_rank_centrality(const ComparisonDataset& data, const Regularizer& d);

/// lambda = min(eta / sqrt(m), 1).
double lambda_schedule(double eta, long long m);

/// Maximizes the comparison log-likelihood minus l2_strength * ||v||^2 by
/// full-batch gradient ascent from v = 0; scores are the normalized exp(v).
/// Non-convergence is reported through the result's converged flag.
RankingResult btl_mle(const ComparisonDataset& data, const MleConfig& config);

/// Penalized log-likelihood and its exact gradient at v.
std::pair<double, Eigen::VectorXd> mle_objective_and_gradient(const Eigen::VectorXd& v,
                                                              const ComparisonDataset& data,
                                                              double l2_strength);

}  // namespace regrank

#pragma once

#include <Eigen/Dense>

#include "regrank/types.hpp"

namespace regrank {

/// Row-stochastic n x n matrix. Entries below -1e-15 are rejected; float
/// dust in [-1e-15, 0) is clamped to 0. Row sums must be 1 within 1e-12.
class TransitionMatrix {
public:
    explicit TransitionMatrix(Eigen::MatrixXd entries);

    int size() const { return static_cast<int>(q_.rows()); }
    const Eigen::MatrixXd& entries() const { return q_; }
    double operator()(int i, int j) const { return q_(i, j); }

private:
    Eigen::MatrixXd q_;
};

struct ErgodicityReport {
    bool strongly_connected;
    bool aperiodic;
    bool ergodic;  // strongly_connected && aperiodic
    int component_count;
};

/// Q from the model: Q_ij = mu_ij * P_ij off-diagonal, diagonal completes
/// the row to 1. Satisfies detailed balance w_i Q_ij = w_j Q_ji.
TransitionMatrix true_transition_matrix(const BtlScores& w, const SamplingDistribution& mu);

/// Q-hat from counts: Q_ij = C_ij / m where C_ij is the number of
/// comparisons between i and j that j won. For m = 0 returns the identity
/// (empty-sum convention).
TransitionMatrix empirical_transition_matrix(const ComparisonDataset& data);

/// Strong connectivity of the directed graph with edge i -> j iff
/// Q_ij > 1e-15 (i != j), and aperiodicity via a positive diagonal entry or
/// cycle-length gcd.
ErgodicityReport check_ergodicity(const TransitionMatrix& q);

struct StationaryResult {
    Eigen::VectorXd pi;
    int iterations;
};

/// Left power iteration from the uniform vector with l1 renormalization.
/// On return ||pi Q - pi||_1 <= tol. Throws NotErgodicError if the chain
/// has no unique stationary distribution and MaxIterationsError past the cap.
StationaryResult stationary_distribution(const TransitionMatrix& q, double tol = 1e-12,
                                         int max_iter = 100000);

/// Fraction of entries of Q^t with magnitude below 1e-15.
double matrix_power_density(const TransitionMatrix& q, int t);

}  // namespace regrank

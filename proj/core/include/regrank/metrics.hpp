#pragma once

#include <Eigen/Dense>
#include <optional>

#include "regrank/types.hpp"

namespace regrank {

struct MetricRow {
    std::optional<double> kendall_tau;
    std::optional<double> l2_rel_err;  // populated only when truth is known
    std::optional<double> test_err;    // populated only when a test set is supplied
    bool failed = false;
};

/// Kendall's Tau-b: (P - Q) / sqrt((P + Q + T)(P + Q + U)) with P concordant
/// pairs, Q discordant, T ties only in alpha, U ties only in beta. Pairs
/// tied in both vectors count in none of the four. O(n log n).
double kendall_tau_b(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta);

/// ||estimate - truth||_2 / ||truth||_2 after l1-normalizing both to sum 1.
double relative_l2_error(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth);

/// Fraction of test records whose observed winner has the lower estimated
/// score; exact score ties count as error 1/2.
double pairwise_test_error(const Eigen::VectorXd& scores, const ComparisonDataset& test);

}  // namespace regrank

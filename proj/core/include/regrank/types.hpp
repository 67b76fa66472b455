#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "regrank/errors.hpp"

namespace regrank {

/// Positive score vector, normalized to sum 1 on construction.
/// Ranking higher-score items above lower-score items is the ground truth
/// ordering in the Bradley-Terry-Luce model.
class BtlScores {
public:
    explicit BtlScores(Eigen::VectorXd raw);

    int size() const { return static_cast<int>(w_.size()); }
    const Eigen::VectorXd& weights() const { return w_; }
    double operator[](int i) const { return w_[i]; }

    /// b = max_{i,j} w_i / w_j, computed once at construction.
    double max_ratio() const { return b_; }

private:
    Eigen::VectorXd w_;
    double b_;
};

/// Probability mass over unordered item pairs {i, j}, i != j.
/// Stored as a symmetric matrix with zero diagonal; the masses over i < j
/// sum to 1.
class SamplingDistribution {
public:
    explicit SamplingDistribution(Eigen::MatrixXd mu);

    int size() const { return static_cast<int>(mu_.rows()); }
    const Eigen::MatrixXd& mass() const { return mu_; }
    double operator()(int i, int j) const { return mu_(i, j); }

    double mu_min() const { return mu_min_; }
    double mu_max() const { return mu_max_; }

private:
    Eigen::MatrixXd mu_;
    double mu_min_;
    double mu_max_;
};

/// One observed comparison. Canonical orientation is i < j, with y = 1
/// meaning j won and y = 0 meaning i won.
struct Comparison {
    int i;
    int j;
    int y;
};

class ComparisonDataset {
public:
    /// Canonicalizes records (swaps i > j and flips y) and validates indices.
    ComparisonDataset(int n, std::vector<Comparison> records);

    int item_count() const { return n_; }
    long long size() const { return static_cast<long long>(records_.size()); }
    bool empty() const { return records_.empty(); }
    const std::vector<Comparison>& records() const { return records_; }

private:
    int n_;
    std::vector<Comparison> records_;
};

/// n feature vectors of shared dimension d, one per item.
class FeatureSet {
public:
    explicit FeatureSet(Eigen::MatrixXd x);

    int size() const { return static_cast<int>(x_.rows()); }
    int dim() const { return static_cast<int>(x_.cols()); }
    const Eigen::MatrixXd& points() const { return x_; }

private:
    Eigen::MatrixXd x_;
};

struct RankingResult {
    Eigen::VectorXd scores;      // nonnegative, sums to 1
    std::vector<int> ranking;    // item ids, best first; ties by ascending id
    std::string algorithm;
    std::string params;
    int iterations = 0;
    bool converged = true;
};

/// Permutation of [n] sorted by descending score, ties broken by ascending
/// item index.
std::vector<int> ranking_from_scores(const Eigen::VectorXd& scores);

/// P(i < j), the probability that j is preferred to i: w_j / (w_i + w_j).
/// Invariant to scaling w.
double comparison_probability(const Eigen::VectorXd& w, int i, int j);
double comparison_probability(const BtlScores& w, int i, int j);

}  // namespace regrank

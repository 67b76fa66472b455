#include "regrank/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace regrank {

BtlScores::BtlScores(Eigen::VectorXd raw) {
    if (raw.size() < 1) {
        throw ValidationError("BtlScores: empty score vector");
    }
    for (Eigen::Index i = 0; i < raw.size(); ++i) {
        if (!std::isfinite(raw[i]) || raw[i] <= 0.0) {
            throw ValidationError("BtlScores: entry " + std::to_string(i) +
                                  " is not strictly positive and finite");
        }
    }
    w_ = raw / raw.sum();
    b_ = w_.maxCoeff() / w_.minCoeff();
}

SamplingDistribution::SamplingDistribution(Eigen::MatrixXd mu) : mu_(std::move(mu)) {
    const Eigen::Index n = mu_.rows();
    if (n < 2 || mu_.cols() != n) {
        throw ValidationError("SamplingDistribution: matrix must be square with n >= 2");
    }
    double total = 0.0;
    mu_min_ = std::numeric_limits<double>::infinity();
    mu_max_ = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (mu_(i, i) != 0.0) {
            throw ValidationError("SamplingDistribution: nonzero diagonal entry");
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = mu_(i, j);
            if (!std::isfinite(v) || v < 0.0) {
                throw ValidationError("SamplingDistribution: negative or non-finite mass");
            }
            if (mu_(j, i) != v) {
                throw ValidationError("SamplingDistribution: matrix not symmetric");
            }
            total += v;
            mu_min_ = std::min(mu_min_, v);
            mu_max_ = std::max(mu_max_, v);
        }
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("SamplingDistribution: pair masses sum to " +
                              std::to_string(total) + ", expected 1");
    }
}

ComparisonDataset::ComparisonDataset(int n, std::vector<Comparison> records)
    : n_(n), records_(std::move(records)) {
    if (n_ < 1) {
        throw ValidationError("ComparisonDataset: item count must be positive");
    }
    for (auto& r : records_) {
        if (r.i > r.j) {
            std::swap(r.i, r.j);
            r.y = 1 - r.y;
        }
        if (r.i < 0 || r.j >= n_ || r.i == r.j) {
            throw ValidationError("ComparisonDataset: invalid pair (" +
                                  std::to_string(r.i) + ", " + std::to_string(r.j) + ")");
        }
        if (r.y != 0 && r.y != 1) {
            throw ValidationError("ComparisonDataset: outcome must be 0 or 1");
        }
    }
}

FeatureSet::FeatureSet(Eigen::MatrixXd x) : x_(std::move(x)) {
    if (x_.rows() < 1 || x_.cols() < 1) {
        throw ValidationError("FeatureSet: need at least one item and one dimension");
    }
    if (!x_.allFinite()) {
        throw ValidationError("FeatureSet: non-finite feature value");
    }
}

std::vector<int> ranking_from_scores(const Eigen::VectorXd& scores) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

double comparison_probability(const Eigen::VectorXd& w, int i, int j) {
    const int n = static_cast<int>(w.size());
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw ValidationError("comparison_probability: index out of range");
    }
    if (i == j) {
        throw ValidationError("comparison_probability: items must differ");
    }
    return w[j] / (w[i] + w[j]);
}

double comparison_probability(const BtlScores& w, int i, int j) {
    return comparison_probability(w.weights(), i, j);
}

}  // namespace regrank

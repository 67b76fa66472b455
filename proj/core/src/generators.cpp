#include "regrank/generators.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace regrank {

SamplingDistribution uniform_mu(int n) {
    if (n < 2) {
        throw ValidationError("uniform_mu: need at least two items");
    }
    const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
    Eigen::MatrixXd mu = Eigen::MatrixXd::Constant(n, n, 1.0 / pairs);
    mu.diagonal().setZero();
    return SamplingDistribution(std::move(mu));
}

ComparisonDataset sample_comparisons(const BtlScores& w, const SamplingDistribution& mu,
                                     long long m, std::uint64_t seed) {
    const int n = w.size();
    if (mu.size() != n) {
        throw ValidationError("sample_comparisons: dimension mismatch");
    }
    if (m < 0) {
        throw ValidationError("sample_comparisons: negative sample count");
    }

    // Cumulative mass over pairs i < j; last entry is 1 up to rounding.
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> cdf;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            acc += mu(i, j);
            pairs.emplace_back(i, j);
            cdf.push_back(acc);
        }
    }
    cdf.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Comparison> records;
    records.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        const double u = unit(rng);
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const auto [i, j] = pairs[static_cast<std::size_t>(it - cdf.begin())];
        const int y = unit(rng) < comparison_probability(w, i, j) ? 1 : 0;
        records.push_back({i, j, y});
    }
    return ComparisonDataset(n, std::move(records));
}

BtlScores scores_random_exp(int n, std::uint64_t seed) {
    if (n < 2) {
        throw ValidationError("scores_random_exp: need at least two items");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> v(0.0, 5.0);
    Eigen::VectorXd raw(n);
    for (int i = 0; i < n; ++i) {
        raw[i] = std::exp(v(rng));
    }
    return BtlScores(std::move(raw));
}

BtlScores scores_linear(int n) {
    if (n < 2) {
        throw ValidationError("scores_linear: need at least two items");
    }
    Eigen::VectorXd raw(n);
    for (int i = 0; i < n; ++i) {
        raw[i] = static_cast<double>(i + 1);
    }
    return BtlScores(std::move(raw));
}

FeaturedScores generate_experiment_a(std::uint64_t seed, int n) {
    if (n < 2) {
        throw ValidationError("generate_experiment_a: need at least two items");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(0.0, 4.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::MatrixXd x(n, 2);
    for (int i = 0; i < n; ++i) {
        x(i, 0) = box(rng);
        x(i, 1) = box(rng);
    }
    Eigen::MatrixXd omega(4, 2);
    for (int h = 0; h < 4; ++h) {
        omega(h, 0) = gauss(rng);
        omega(h, 1) = gauss(rng);
    }

    Eigen::VectorXd raw(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int h = 0; h < 2; ++h) {
            s += std::exp(std::cos(5.0 * omega.row(h).dot(x.row(i))));
        }
        for (int h = 2; h < 4; ++h) {
            s += std::exp(omega.row(h).dot(x.row(i)) / 10.0);
        }
        raw[i] = s;
    }
    return {FeatureSet(std::move(x)), BtlScores(std::move(raw))};
}

FeaturedScores generate_experiment_b(std::uint64_t seed, int n) {
    if (n < 2) {
        throw ValidationError("generate_experiment_b: need at least two items");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(0.0, 4.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::MatrixXd x(n, 1);
    for (int i = 0; i < n; ++i) {
        x(i, 0) = box(rng);
    }
    const double omega = gauss(rng);

    Eigen::VectorXd raw(n);
    for (int i = 0; i < n; ++i) {
        raw[i] = std::exp(std::cos(5.0 * omega * x(i, 0)));
    }
    return {FeatureSet(std::move(x)), BtlScores(std::move(raw))};
}

FeaturedScores generate_clustered(int n_clusters, int cluster_size, double separation,
                                  std::uint64_t seed) {
    if (n_clusters < 1 || cluster_size < 1) {
        throw ValidationError("generate_clustered: cluster counts must be positive");
    }
    if (n_clusters * cluster_size < 2) {
        throw ValidationError("generate_clustered: need at least two items");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> v(0.0, 5.0);

    const int n = n_clusters * cluster_size;
    Eigen::MatrixXd x(n, 1);
    Eigen::VectorXd raw(n);
    for (int c = 0; c < n_clusters; ++c) {
        const double score = std::exp(v(rng));
        for (int k = 0; k < cluster_size; ++k) {
            const int id = c * cluster_size + k;
            x(id, 0) = separation * static_cast<double>(c);
            raw[id] = score;
        }
    }
    return {FeatureSet(std::move(x)), BtlScores(std::move(raw))};
}

}  // namespace regrank

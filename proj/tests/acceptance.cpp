// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "regrank/bounds.hpp"
#include "regrank/experiment.hpp"
#include "regrank/generators.hpp"
#include "regrank/markov.hpp"
#include "regrank/metrics.hpp"
#include "regrank/rank.hpp"
#include "regrank/regularize.hpp"

using namespace regrank;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail = "") {
    std::printf("%2d. %-34s %s%s%s\n", index, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

bool criterion_detailed_balance() {
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 49);
        BtlScores w(oracles::random_scores(n, 10.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        const auto q = true_transition_matrix(w, mu);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                worst = std::max(worst, std::abs(w[i] * q(i, j) - w[j] * q(j, i)));
            }
        }
    }
    return worst <= 1e-15;
}

bool criterion_stationary_recovery() {
    std::mt19937_64 rng(1002);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 49);
        BtlScores w(oracles::random_scores(n, 6.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        const auto res = stationary_distribution(true_transition_matrix(w, mu));
        if ((res.pi - w.weights()).norm() / w.weights().norm() > 1e-8) return false;
    }
    return true;
}

bool criterion_unbiasedness() {
    const int n = 4;
    std::mt19937_64 rng(1003);
    BtlScores w(oracles::random_scores(n, 3.0, rng));
    SamplingDistribution mu(oracles::random_mu(n, rng));
    const auto q = true_transition_matrix(w, mu);
    const int reps = 100000;
    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(n, n);
    for (int rep = 0; rep < reps; ++rep) {
        mean += empirical_transition_matrix(sample_comparisons(w, mu, 1, 40000 + rep)).entries();
    }
    mean /= reps;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = q(i, j);
            const double se = std::sqrt(p * (1 - p) / reps);
            if (std::abs(mean(i, j) - p) > 4 * se) return false;
        }
    }
    return true;
}

bool criterion_error_rate(std::string& detail) {
    const int n = 10;
    Eigen::VectorXd raw(n);
    for (int i = 0; i < n; ++i) raw[i] = 1.0 + static_cast<double>(i) / (n - 1);  // b = 2
    BtlScores w(raw);
    const auto mu = uniform_mu(n);
    auto mean_err = [&](long long m) {
        double total = 0.0;
        for (int trial = 0; trial < 40; ++trial) {
            const auto data = sample_comparisons(w, mu, m, 7000 + trial);
            const auto res = rank_centrality(data);
            total += (res.scores - w.weights()).norm() / w.weights().norm();
        }
        return total / 40;
    };
    const double ratio = mean_err(1600) / mean_err(6400);
    detail = fmt("error ratio m=1600/m=6400: %.3f (window [%.1f, 2.6])", ratio, 1.6);
    return ratio >= 1.6 && ratio <= 2.6;
}

bool criterion_gap_bound() {
    std::mt19937_64 rng(1005);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 14);
        BtlScores w(oracles::random_scores(n, 6.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        const auto q = true_transition_matrix(w, mu);
        BoundInputs in;
        in.n = n;
        in.b = w.max_ratio();
        in.mu_min = mu.mu_min();
        in.mu_max = mu.mu_max();
        const double exact = oracles::exact_spectral_gap(q.entries(), w.weights());
        if (exact < spectral_gap_lower_bound(in) - 1e-12) return false;
    }
    return true;
}

bool criterion_perturbation_bound() {
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int checked = 0;
    while (checked < 50) {
        const int n = 5;
        BtlScores w(oracles::random_scores(n, 2.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        const auto q = true_transition_matrix(w, mu);
        Eigen::MatrixXd delta(n, n);
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                delta(i, j) = 1e-3 * u(rng);
                s += delta(i, j);
            }
            delta(i, i) = -s;
        }
        const Eigen::MatrixXd perturbed = q.entries() + delta;
        if (perturbed.minCoeff() <= 0.0) continue;
        BoundInputs in;
        in.n = n;
        in.b = w.max_ratio();
        in.mu_min = mu.mu_min();
        in.mu_max = mu.mu_max();
        double bound;
        try {
            bound = perturbation_error_bound(delta.operatorNorm(), in);
        } catch (const HypothesisViolatedError&) {
            continue;
        }
        const Eigen::VectorXd pi = oracles::dense_stationary(q.entries());
        const Eigen::VectorXd pit = oracles::dense_stationary(perturbed);
        if ((pi - pit).norm() / pi.norm() > bound + 1e-12) return false;
        ++checked;
    }
    return true;
}

bool criterion_bias_bound() {
    std::mt19937_64 rng(1007);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 18);
        BtlScores w(oracles::random_scores(n, 4.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        const auto q = true_transition_matrix(w, mu);
        BoundInputs in;
        in.n = n;
        in.b = w.max_ratio();
        in.mu_min = mu.mu_min();
        in.mu_max = mu.mu_max();
        const double gamma = gamma_value(in);
        for (double frac : {1.0 / 8, 1.0 / 4, 3.0 / 8}) {
            const double lambda = frac * gamma;
            const auto chain = apply_regularizer(q, lambda_regularizer(n, lambda));
            const Eigen::VectorXd tilde = oracles::dense_stationary(chain.entries());
            const double exact = (w.weights() - tilde).norm() / w.weights().norm();
            if (exact > bias_bound(lambda, gamma) + 1e-12) return false;
        }
    }
    return true;
}

bool criterion_clustered_density(std::string& detail) {
    const auto g = generate_clustered(10, 10, 1e6, 11);
    const auto mu = uniform_mu(100);
    const auto data = sample_comparisons(g.scores, mu, 200, 11);
    const auto qhat = empirical_transition_matrix(data);
    const auto d = diffusion_regularizer(g.features, 1.0);
    const auto qd = apply_regularizer(qhat, d);

    const double sparse = matrix_power_density(qhat, 50);
    const double dense = matrix_power_density(qd, 50);
    detail = fmt("zero fractions: qhat^50 %.3f (> 0.5), (qhat d)^50 %.3f (< 0.05)", sparse,
                 dense);
    if (!(sparse > 0.5 && dense < 0.05)) return false;

    // same-cluster score agreement under the exactly block-uniform D
    const auto res = regularized_rank_centrality(data, d);
    for (int c = 0; c < 10; ++c) {
        for (int k = 1; k < 10; ++k) {
            const double a = res.scores[c * 10 + k];
            const double b = res.scores[c * 10];
            if (std::abs(a - b) > 1e-6 * std::max(std::abs(a), std::abs(b))) return false;
        }
    }
    return true;
}

bool criterion_experiment_b(std::string& detail) {
    const int n = 100;
    const long long m = n;
    const auto g = generate_experiment_b(2024, n);
    const auto mu = uniform_mu(n);

    std::vector<AlgorithmSpec> specs;
    AlgorithmSpec lrc{AlgorithmSpec::Kind::LambdaRc};
    lrc.eta = 1.0 / 6;
    specs.push_back(lrc);
    const std::vector<double> sigma_grid = {0.015625, 0.03125, 0.0625, 0.125, 0.25, 0.5, 1.0};
    for (double sigma : sigma_grid) {
        AlgorithmSpec ddrc{AlgorithmSpec::Kind::DecayedDiffusionRc};
        ddrc.sigma = sigma;
        specs.push_back(ddrc);
    }

    std::vector<double> tau_sums(specs.size(), 0.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto outcomes =
            run_trial(g.scores, &g.features, mu, m, specs, 9000 + trial);
        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            tau_sums[k] += outcomes[k].metrics.kendall_tau.value_or(0.0);
        }
    }
    const double lrc_mean = tau_sums[0] / 20;
    double best_ddrc = -2.0;
    for (std::size_t k = 1; k < tau_sums.size(); ++k) {
        best_ddrc = std::max(best_ddrc, tau_sums[k] / 20);
    }
    detail = fmt("mean tau: decayed-diffusion (best sigma) %.3f vs lambda-rc %.3f", best_ddrc,
                 lrc_mean);
    return best_ddrc > lrc_mean;
}

bool criterion_tau_oracle() {
    std::mt19937_64 rng(1010);
    int done = 0;
    while (done < 100) {
        const int n = 2 + static_cast<int>(rng() % 49);
        std::uniform_int_distribution<int> levels(0, 5);
        Eigen::VectorXd a(n), b(n);
        bool a_const = true, b_const = true;
        for (int i = 0; i < n; ++i) {
            a[i] = levels(rng);
            b[i] = levels(rng);
            if (a[i] != a[0]) a_const = false;
            if (b[i] != b[0]) b_const = false;
        }
        if (a_const || b_const) continue;
        if (kendall_tau_b(a, b) != oracles::tau_enumeration(a, b)) return false;
        ++done;
    }
    return true;
}

bool criterion_mle_gradient() {
    std::mt19937_64 rng(1011);
    std::uniform_real_distribution<double> uv(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const long long m = 5 + static_cast<long long>(rng() % 46);
        BtlScores w(oracles::random_scores(n, 4.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        const auto data = sample_comparisons(w, mu, m, rng());
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = uv(rng);
        const auto [obj, grad] = mle_objective_and_gradient(v, data, 0.2);
        const double h = 1e-6;
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd vp = v, vm = v;
            vp[i] += h;
            vm[i] -= h;
            const double fd = (mle_objective_and_gradient(vp, data, 0.2).first -
                               mle_objective_and_gradient(vm, data, 0.2).first) /
                              (2 * h);
            if (std::abs(grad[i] - fd) > 1e-5 * std::max(1.0, std::abs(grad[i]))) return false;
        }
    }
    return true;
}

bool criterion_lambda_totality() {
    const std::vector<double> lambdas = {0.01, 0.1, 0.5};
    std::mt19937_64 rng(1012);
    auto check = [&](const ComparisonDataset& data) {
        for (double lambda : lambdas) {
            const auto res = regularized_rank_centrality(
                data, lambda_regularizer(data.item_count(), lambda));
            if (res.scores.minCoeff() < 0.0) return false;
            if (std::abs(res.scores.sum() - 1.0) > 1e-9) return false;
        }
        return true;
    };
    for (int n = 2; n <= 10; ++n) {
        if (!check(ComparisonDataset(n, {}))) return false;
    }
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const long long m = static_cast<long long>(rng() % 4);
        BtlScores w(oracles::random_scores(n, 5.0, rng));
        SamplingDistribution mu(oracles::random_mu(n, rng));
        if (!check(sample_comparisons(w, mu, m, rng()))) return false;
    }
    return true;
}

}  // namespace

int main() {
    std::string detail;

    report(1, "detailed balance", criterion_detailed_balance());
    report(2, "stationary recovery", criterion_stationary_recovery());
    report(3, "empirical chain unbiasedness", criterion_unbiasedness());
    detail.clear();
    {
        const bool ok = criterion_error_rate(detail);
        report(4, "rc error decay rate", ok, detail);
    }
    report(5, "spectral gap lower bound", criterion_gap_bound());
    report(6, "perturbation error bound", criterion_perturbation_bound());
    report(7, "regularization bias bound", criterion_bias_bound());
    detail.clear();
    {
        const bool ok = criterion_clustered_density(detail);
        report(8, "clustered density + equalization", ok, detail);
    }
    detail.clear();
    {
        const bool ok = criterion_experiment_b(detail);
        report(9, "decayed diffusion beats lambda", ok, detail);
    }
    report(10, "kendall tau oracle equivalence", criterion_tau_oracle());
    report(11, "mle gradient finite differences", criterion_mle_gradient());
    report(12, "lambda regularization totality", criterion_lambda_totality());

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}

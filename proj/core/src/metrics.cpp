#include "regrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace regrank {

namespace {

long long tie_pair_count(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    long long ties = 0;
    std::size_t run = 1;
    for (std::size_t k = 1; k <= values.size(); ++k) {
        if (k < values.size() && values[k] == values[k - 1]) {
            ++run;
        } else {
            ties += static_cast<long long>(run) * (run - 1) / 2;
            run = 1;
        }
    }
    return ties;
}

// Pairs p < q (in the given order) with seq[p] > seq[q], by merge sort.
long long count_inversions(std::vector<double>& seq) {
    const std::size_t n = seq.size();
    std::vector<double> buffer(n);
    long long inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t a = lo, b = mid, out = lo;
            while (a < mid && b < hi) {
                if (seq[a] <= seq[b]) {
                    buffer[out++] = seq[a++];
                } else {
                    inversions += static_cast<long long>(mid - a);
                    buffer[out++] = seq[b++];
                }
            }
            while (a < mid) buffer[out++] = seq[a++];
            while (b < hi) buffer[out++] = seq[b++];
            std::copy(buffer.begin() + lo, buffer.begin() + hi, seq.begin() + lo);
        }
    }
    return inversions;
}

}  // namespace

double kendall_tau_b(const Eigen::VectorXd& alpha, const Eigen::VectorXd& beta) {
    const long long n = alpha.size();
    if (n != beta.size() || n < 2) {
        throw ValidationError("kendall_tau_b: vectors must have equal length >= 2");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (alpha[a] != alpha[b]) return alpha[a] < alpha[b];
        return beta[a] < beta[b];
    });

    // Tie counts: n1 within alpha, n2 within beta, n3 joint.
    long long n1 = 0, n3 = 0;
    {
        std::size_t run_a = 1, run_ab = 1;
        for (long long k = 1; k <= n; ++k) {
            const bool same_a = k < n && alpha[order[k]] == alpha[order[k - 1]];
            const bool same_ab = same_a && beta[order[k]] == beta[order[k - 1]];
            if (same_a) ++run_a; else { n1 += static_cast<long long>(run_a) * (run_a - 1) / 2; run_a = 1; }
            if (same_ab) ++run_ab; else { n3 += static_cast<long long>(run_ab) * (run_ab - 1) / 2; run_ab = 1; }
        }
    }
    const long long n2 = tie_pair_count(std::vector<double>(beta.data(), beta.data() + n));

    const long long n0 = n * (n - 1) / 2;
    if (n1 == n0 || n2 == n0) {
        throw DegenerateInputError("kendall_tau_b: constant input vector");
    }

    // In alpha-sorted order (beta ascending within alpha ties) every
    // inversion of the beta sequence is a discordant pair.
    std::vector<double> beta_sorted(n);
    for (long long k = 0; k < n; ++k) beta_sorted[k] = beta[order[k]];
    const long long discordant = count_inversions(beta_sorted);

    const long long numerator = n0 - n1 - n2 + n3 - 2 * discordant;  // P - Q
    const double denominator =
        std::sqrt(static_cast<double>((n0 - n1) * (n0 - n2)));
    return static_cast<double>(numerator) / denominator;
}

double relative_l2_error(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth) {
    if (estimate.size() != truth.size() || truth.size() < 1) {
        throw ValidationError("relative_l2_error: vectors must have equal positive length");
    }
    const double truth_sum = truth.sum();
    const double estimate_sum = estimate.sum();
    if (truth_sum == 0.0) {
        throw ValidationError("relative_l2_error: zero truth vector");
    }
    if (estimate_sum == 0.0) {
        throw ValidationError("relative_l2_error: zero estimate vector");
    }
    const Eigen::VectorXd t = truth / truth_sum;
    const Eigen::VectorXd e = estimate / estimate_sum;
    return (e - t).norm() / t.norm();
}

double pairwise_test_error(const Eigen::VectorXd& scores, const ComparisonDataset& test) {
    if (test.empty()) {
        throw ValidationError("pairwise_test_error: empty test set");
    }
    if (scores.size() != test.item_count()) {
        throw ValidationError("pairwise_test_error: dimension mismatch");
    }
    double errors = 0.0;
    for (const auto& r : test.records()) {
        const int winner = r.y == 1 ? r.j : r.i;
        const int loser = r.y == 1 ? r.i : r.j;
        if (scores[winner] < scores[loser]) {
            errors += 1.0;
        } else if (scores[winner] == scores[loser]) {
            errors += 0.5;
        }
    }
    return errors / static_cast<double>(test.size());
}

}  // namespace regrank

#include "regrank/markov.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

namespace regrank {

namespace {

constexpr double kZeroThreshold = 1e-15;

std::vector<std::vector<int>> adjacency(const Eigen::MatrixXd& q) {
    const int n = static_cast<int>(q.rows());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && q(i, j) > kZeroThreshold) {
                adj[i].push_back(j);
            }
        }
    }
    return adj;
}

// Kosaraju with explicit stacks.
int count_sccs(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> radj(n);
    for (int u = 0; u < n; ++u) {
        for (int v : adj[u]) radj[v].push_back(u);
    }

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                const int v = adj[u][next++];
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }

    std::fill(seen.begin(), seen.end(), 0);
    int components = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (seen[*it]) continue;
        ++components;
        std::vector<int> stack{*it};
        seen[*it] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : radj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return components;
}

// Period of a strongly connected graph: gcd of (level[u] + 1 - level[v])
// over all edges, with levels from a BFS.
int graph_period(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> level(n, -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                q.push(v);
            }
        }
    }
    int g = 0;
    for (int u = 0; u < n; ++u) {
        for (int v : adj[u]) {
            g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
        }
    }
    return g == 0 ? 1 : g;
}

}  // namespace

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd entries) : q_(std::move(entries)) {
    const Eigen::Index n = q_.rows();
    if (n < 1 || q_.cols() != n) {
        throw ValidationError("TransitionMatrix: matrix must be square and nonempty");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            double v = q_(i, j);
            if (!std::isfinite(v) || v < -kZeroThreshold) {
                throw ValidationError("TransitionMatrix: negative or non-finite entry");
            }
            if (v < 0.0) {
                v = 0.0;
                q_(i, j) = 0.0;
            }
            row_sum += v;
        }
        if (std::abs(row_sum - 1.0) > 1e-12) {
            throw ValidationError("TransitionMatrix: row " + std::to_string(i) +
                                  " sums to " + std::to_string(row_sum));
        }
    }
}

TransitionMatrix true_transition_matrix(const BtlScores& w, const SamplingDistribution& mu) {
    const int n = w.size();
    if (mu.size() != n) {
        throw ValidationError("true_transition_matrix: dimension mismatch");
    }
    Eigen::MatrixXd q(n, n);
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            q(i, j) = mu(i, j) * comparison_probability(w, i, j);
            off += q(i, j);
        }
        q(i, i) = 1.0 - off;
    }
    return TransitionMatrix(std::move(q));
}

TransitionMatrix empirical_transition_matrix(const ComparisonDataset& data) {
    const int n = data.item_count();
    const long long m = data.size();
    if (m == 0) {
        return TransitionMatrix(Eigen::MatrixXd::Identity(n, n));
    }
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(n, n);
    for (const auto& r : data.records()) {
        if (r.y == 1) {
            counts(r.i, r.j) += 1.0;  // j won: transition i -> j
        } else {
            counts(r.j, r.i) += 1.0;
        }
    }
    Eigen::MatrixXd q = counts / static_cast<double>(m);
    for (int i = 0; i < n; ++i) {
        q(i, i) = 1.0 - q.row(i).sum();
    }
    return TransitionMatrix(std::move(q));
}

ErgodicityReport check_ergodicity(const TransitionMatrix& q) {
    const auto adj = adjacency(q.entries());
    const int components = count_sccs(adj);
    const bool connected = components == 1;

    bool aperiodic = false;
    if (connected) {
        bool positive_diagonal = false;
        for (int i = 0; i < q.size(); ++i) {
            if (q(i, i) > kZeroThreshold) {
                positive_diagonal = true;
                break;
            }
        }
        aperiodic = positive_diagonal || graph_period(adj) == 1;
    }
    return {connected, aperiodic, connected && aperiodic, components};
}

StationaryResult stationary_distribution(const TransitionMatrix& q, double tol, int max_iter) {
    if (!check_ergodicity(q).ergodic) {
        throw NotErgodicError("stationary_distribution: chain is not ergodic");
    }
    const int n = q.size();
    Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
    Eigen::VectorXd next(n);
    for (int iter = 1; iter <= max_iter; ++iter) {
        next.noalias() = q.entries().transpose() * pi;
        const double residual = (next - pi).lpNorm<1>();
        if (residual <= tol) {
            return {pi, iter - 1};
        }
        pi = next / next.sum();
    }
    std::vector<double> iterate(pi.data(), pi.data() + n);
    next.noalias() = q.entries().transpose() * pi;
    throw MaxIterationsError(std::move(iterate), (next - pi).lpNorm<1>(), max_iter);
}

double matrix_power_density(const TransitionMatrix& q, int t) {
    if (t < 1) {
        throw ValidationError("matrix_power_density: power must be at least 1");
    }
    Eigen::MatrixXd p = q.entries();
    for (int step = 1; step < t; ++step) {
        p = p * q.entries();
    }
    const Eigen::Index n = p.rows();
    long long zeros = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(p(i, j)) < kZeroThreshold) ++zeros;
        }
    }
    return static_cast<double>(zeros) / static_cast<double>(n * n);
}

}  // namespace regrank

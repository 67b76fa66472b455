#include "regrank/rank.hpp"

#include <algorithm>
#include <cmath>

namespace regrank {

namespace {

RankingResult result_from_stationary(StationaryResult st, std::string algorithm,
                                     std::string params) {
    RankingResult r;
    r.scores = std::move(st.pi);
    r.ranking = ranking_from_scores(r.scores);
    r.algorithm = std::move(algorithm);
    r.params = std::move(params);
    r.iterations = st.iterations;
    r.converged = true;
    return r;
}

std::string regularizer_name(Regularizer::Kind kind) {
    switch (kind) {
        case Regularizer::Kind::Identity: return "rank-centrality";
        case Regularizer::Kind::Lambda: return "lambda-rc";
        case Regularizer::Kind::Diffusion: return "diffusion-rc";
        case Regularizer::Kind::DecayedDiffusion: return "decayed-diffusion-rc";
    }
    return "regularized-rc";
}

}  // namespace

void MleConfig::validate() const {
    if (!(l2_strength >= 0.0) || !(step_size > 0.0) || !(grad_tol > 0.0) || max_iter < 1) {
        throw ValidationError("MleConfig: invalid optimizer settings");
    }
}

RankingResult rank_centrality(const ComparisonDataset& data) {
    if (data.item_count() < 2) {
        throw ValidationError("rank_centrality: need at least two items");
    }
    const TransitionMatrix qhat = empirical_transition_matrix(data);
    return result_from_stationary(stationary_distribution(qhat), "rank-centrality", "");
}

RankingResult regularized_rank_centrality(const ComparisonDataset& data, const Regularizer& d) {
    if (data.item_count() != d.matrix.size()) {
        throw ValidationError("regularized_rank_centrality: dimension mismatch");
    }
    const TransitionMatrix qhat = empirical_transition_matrix(data);
    const TransitionMatrix chain = apply_regularizer(qhat, d);
    return result_from_stationary(stationary_distribution(chain), regularizer_name(d.kind),
                                  d.params);
}

double lambda_schedule(double eta, long long m) {
    if (!(eta > 0.0) || m < 1) {
        throw ValidationError("lambda_schedule: eta must be positive and m >= 1");
    }
    return std::min(eta / std::sqrt(static_cast<double>(m)), 1.0);
}

std::pair<double, Eigen::VectorXd> mle_objective_and_gradient(const Eigen::VectorXd& v,
                                                              const ComparisonDataset& data,
                                                              double l2_strength) {
    if (v.size() != data.item_count()) {
        throw ValidationError("mle_objective_and_gradient: dimension mismatch");
    }
    if (!v.allFinite()) {
        throw ValidationError("mle_objective_and_gradient: non-finite v");
    }
    double objective = 0.0;
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(v.size());
    for (const auto& r : data.records()) {
        const double sign = 2.0 * r.y - 1.0;       // +1 when j won
        const double t = sign * (v[r.j] - v[r.i]); // margin in favor of the winner
        // log sigmoid(t), evaluated stably
        if (t >= 0.0) {
            objective -= std::log1p(std::exp(-t));
        } else {
            objective += t - std::log1p(std::exp(t));
        }
        const double slope = 1.0 / (1.0 + std::exp(t));  // sigmoid(-t)
        grad[r.j] += sign * slope;
        grad[r.i] -= sign * slope;
    }
    objective -= l2_strength * v.squaredNorm();
    grad -= 2.0 * l2_strength * v;
    return {objective, std::move(grad)};
}

RankingResult btl_mle(const ComparisonDataset& data, const MleConfig& config) {
    config.validate();
    if (data.empty() && config.l2_strength == 0.0) {
        throw ValidationError("btl_mle: unregularized MLE is undefined on empty data");
    }
    const int n = data.item_count();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    bool converged = false;
    int iterations = 0;
    for (; iterations < config.max_iter; ++iterations) {
        auto [objective, grad] = mle_objective_and_gradient(v, data, config.l2_strength);
        (void)objective;
        if (grad.lpNorm<Eigen::Infinity>() <= config.grad_tol) {
            converged = true;
            break;
        }
        v += config.step_size * grad;
        if (config.l2_strength == 0.0) {
            // The unpenalized objective is shift-invariant; anchor at mean zero.
            v.array() -= v.mean();
        }
    }

    RankingResult r;
    Eigen::VectorXd raw = (v.array() - v.maxCoeff()).exp();
    r.scores = raw / raw.sum();
    r.ranking = ranking_from_scores(r.scores);
    r.algorithm = "btl-mle";
    r.params = "l2=" + std::to_string(config.l2_strength);
    r.iterations = iterations;
    r.converged = converged;
    return r;
}

}  // namespace regrank

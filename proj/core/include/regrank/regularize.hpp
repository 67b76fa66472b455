#pragma once

#include <string>

#include "regrank/markov.hpp"
#include "regrank/types.hpp"

namespace regrank {

/// Row-stochastic regularizer matrix post-multiplied onto the empirical
/// chain to densify it.
struct Regularizer {
    enum class Kind { Identity, Lambda, Diffusion, DecayedDiffusion };

    TransitionMatrix matrix;
    Kind kind;
    std::string params;  // human-readable hyperparameters, e.g. "lambda=0.1"
};

Regularizer identity_regularizer(int n);

/// D = (1 - lambda) I + (lambda / n) 11^T for lambda in [0, 1]. Any
/// lambda > 0 makes every entry of Q-hat D strictly positive, hence ergodic.
Regularizer lambda_regularizer(int n, double lambda);

/// Gaussian-kernel row normalization of pairwise feature similarities:
/// D_ik proportional to exp(-||x_i - x_k||^2 / sigma^2). Each row uses a
/// max-shift before exponentiating so distant clusters still normalize.
Regularizer diffusion_regularizer(const FeatureSet& x, double sigma);

/// (1 - 1/sqrt(m)) I + (1/sqrt(m)) D: the regularizer's pull decays as the
/// sample count grows.
Regularizer decayed_mix(const Regularizer& d, long long m);

/// The regularized chain Q-hat D (plain matrix product).
TransitionMatrix apply_regularizer(const TransitionMatrix& qhat, const Regularizer& d);

}  // namespace regrank

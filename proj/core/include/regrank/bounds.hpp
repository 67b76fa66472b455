#pragma once

#include "regrank/errors.hpp"

namespace regrank {

/// Parameters shared by the closed-form accuracy and sample-size bounds.
struct BoundInputs {
    int n = 2;
    double b = 1.0;         // max score ratio, >= 1
    double mu_min = 0.0;    // > 0
    double mu_max = 0.0;    // >= mu_min, <= 1
    double epsilon = 0.5;   // target relative l2 error, in (0, 1)
    double delta = 0.1;     // failure probability, in (0, 1)
    double lambda = 0.0;    // regularization constant, >= 0
    long long m = 1;        // comparison count

    void validate() const;
};

/// Lower bound on the spectral gap of the true chain: n mu_min / (2 b).
double spectral_gap_lower_bound(const BoundInputs& in);

/// gamma = n mu_min / (2 (1 + sqrt(2)) b^{3/2}).
double gamma_value(const BoundInputs& in);

/// Stationary-distribution error bound for a perturbed chain with
/// ||Q - Q~|| = delta_norm: 2 d b^{3/2} / (n mu_min - 2 d b^{3/2}).
/// Requires delta_norm < n mu_min / (2 b^{3/2}).
double perturbation_error_bound(double delta_norm, const BoundInputs& in);

/// Comparisons sufficient for plain RankCentrality to reach relative error
/// epsilon with probability 1 - delta (ceiling of the closed form).
long long rc_sample_complexity(const BoundInputs& in);

/// Bias-plus-variance error bound for lambda-regularized RankCentrality at
/// sample count m. Requires lambda in (0, gamma / 2).
double reg_rc_error_bound(const BoundInputs& in);

/// Asymptotic bias of the lambda-regularized chain: lambda / (gamma - lambda),
/// for 0 < lambda < gamma.
double bias_bound(double lambda, double gamma_val);

/// Comparisons sufficient for lambda-regularized RankCentrality. Requires
/// lambda in (0, gamma / 2) and epsilon in (2 lambda / gamma, 1).
long long reg_rc_sample_complexity(const BoundInputs& in);

}  // namespace regrank

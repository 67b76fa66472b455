#include "regrank/bounds.hpp"

#include <cmath>

namespace regrank {

void BoundInputs::validate() const {
    if (n < 2) throw ValidationError("BoundInputs: n must be at least 2");
    if (!(b >= 1.0)) throw ValidationError("BoundInputs: b must be at least 1");
    if (!(mu_min > 0.0)) throw ValidationError("BoundInputs: mu_min must be positive");
    if (!(mu_max >= mu_min) || !(mu_max <= 1.0)) {
        throw ValidationError("BoundInputs: need mu_min <= mu_max <= 1");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ValidationError("BoundInputs: epsilon must lie in (0, 1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ValidationError("BoundInputs: delta must lie in (0, 1)");
    }
    if (!(lambda >= 0.0)) throw ValidationError("BoundInputs: lambda must be nonnegative");
    if (m < 1) throw ValidationError("BoundInputs: m must be at least 1");
}

double spectral_gap_lower_bound(const BoundInputs& in) {
    in.validate();
    return in.n * in.mu_min / (2.0 * in.b);
}

double gamma_value(const BoundInputs& in) {
    in.validate();
    return in.n * in.mu_min / (2.0 * (1.0 + std::sqrt(2.0)) * std::pow(in.b, 1.5));
}

double perturbation_error_bound(double delta_norm, const BoundInputs& in) {
    in.validate();
    if (delta_norm < 0.0) {
        throw ValidationError("perturbation_error_bound: negative perturbation norm");
    }
    const double b32 = std::pow(in.b, 1.5);
    const double threshold = in.n * in.mu_min / (2.0 * b32);
    if (!(delta_norm < threshold)) {
        throw HypothesisViolatedError(
            "perturbation_error_bound: ||Delta|| must be below n mu_min / (2 b^1.5)");
    }
    return 2.0 * delta_norm * b32 / (in.n * in.mu_min - 2.0 * delta_norm * b32);
}

long long rc_sample_complexity(const BoundInputs& in) {
    in.validate();
    const double value = 64.0 * std::pow(in.b, 3.0) / in.n / (in.mu_min * in.mu_min) /
                         (in.epsilon * in.epsilon) *
                         (in.mu_max + in.n * in.mu_max * in.mu_max) *
                         std::log(2.0 * in.n / in.delta);
    return static_cast<long long>(std::ceil(value));
}

double reg_rc_error_bound(const BoundInputs& in) {
    in.validate();
    const double gamma = gamma_value(in);
    if (!(in.lambda > 0.0 && in.lambda < gamma / 2.0)) {
        throw HypothesisViolatedError("reg_rc_error_bound: lambda must lie in (0, gamma/2)");
    }
    const double bias = 2.0 * in.lambda / gamma;
    const double variance = 68.0 * (1.0 - in.lambda) * std::pow(in.b, 3.0) *
                            (in.mu_max + in.n * in.mu_max * in.mu_max) /
                            (in.n * in.mu_min * in.mu_min * static_cast<double>(in.m)) *
                            std::log(2.0 * in.n / in.delta);
    return bias + std::sqrt(variance);
}

double bias_bound(double lambda, double gamma_val) {
    if (!(gamma_val > 0.0)) {
        throw ValidationError("bias_bound: gamma must be positive");
    }
    if (!(lambda > 0.0 && lambda < gamma_val)) {
        throw HypothesisViolatedError("bias_bound: lambda must lie in (0, gamma)");
    }
    return lambda / (gamma_val - lambda);
}

long long reg_rc_sample_complexity(const BoundInputs& in) {
    in.validate();
    const double gamma = gamma_value(in);
    if (!(in.lambda > 0.0 && in.lambda < gamma / 2.0)) {
        throw HypothesisViolatedError(
            "reg_rc_sample_complexity: lambda must lie in (0, gamma/2)");
    }
    const double slack = in.epsilon - 2.0 * in.lambda / gamma;
    if (!(slack > 0.0)) {
        throw HypothesisViolatedError(
            "reg_rc_sample_complexity: epsilon must exceed 2 lambda / gamma");
    }
    const double value = 68.0 * (1.0 - in.lambda) * std::pow(in.b, 3.0) *
                         (in.mu_max + in.n * in.mu_max * in.mu_max) /
                         (in.n * in.mu_min * in.mu_min * slack * slack) *
                         std::log(2.0 * in.n / in.delta);
    return static_cast<long long>(std::ceil(value));
}

}  // namespace regrank

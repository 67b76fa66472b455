#include "regrank/regularize.hpp"

#include <cmath>
#include <sstream>

namespace regrank {

namespace {

std::string format_param(const std::string& name, double value) {
    std::ostringstream os;
    os << name << "=" << value;
    return os.str();
}

}  // namespace

Regularizer identity_regularizer(int n) {
    return {TransitionMatrix(Eigen::MatrixXd::Identity(n, n)), Regularizer::Kind::Identity, ""};
}

Regularizer lambda_regularizer(int n, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw ValidationError("lambda_regularizer: lambda must lie in [0, 1]");
    }
    Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, lambda / n);
    d.diagonal().array() += 1.0 - lambda;
    return {TransitionMatrix(std::move(d)), Regularizer::Kind::Lambda,
            format_param("lambda", lambda)};
}

Regularizer diffusion_regularizer(const FeatureSet& x, double sigma) {
    if (!(sigma > 0.0)) {
        throw ValidationError("diffusion_regularizer: sigma must be positive");
    }
    const int n = x.size();
    const Eigen::MatrixXd& pts = x.points();
    Eigen::MatrixXd d(n, n);
    Eigen::VectorXd exponents(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            exponents[k] = -(pts.row(i) - pts.row(k)).squaredNorm() / (sigma * sigma);
        }
        // Shift by the row maximum so a row of huge distances still normalizes.
        const double shift = exponents.maxCoeff();
        d.row(i) = (exponents.array() - shift).exp();
        d.row(i) /= d.row(i).sum();
    }
    return {TransitionMatrix(std::move(d)), Regularizer::Kind::Diffusion,
            format_param("sigma", sigma)};
}

Regularizer decayed_mix(const Regularizer& d, long long m) {
    if (m < 1) {
        throw ValidationError("decayed_mix: sample count must be at least 1");
    }
    const double weight = 1.0 / std::sqrt(static_cast<double>(m));
    Eigen::MatrixXd mixed = weight * d.matrix.entries();
    mixed.diagonal().array() += 1.0 - weight;
    return {TransitionMatrix(std::move(mixed)), Regularizer::Kind::DecayedDiffusion,
            d.params + (d.params.empty() ? "" : ",") + format_param("m", static_cast<double>(m))};
}

TransitionMatrix apply_regularizer(const TransitionMatrix& qhat, const Regularizer& d) {
    if (qhat.size() != d.matrix.size()) {
        throw ValidationError("apply_regularizer: dimension mismatch");
    }
    return TransitionMatrix(qhat.entries() * d.matrix.entries());
}

}  // namespace regrank

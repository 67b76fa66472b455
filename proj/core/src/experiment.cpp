#include "regrank/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "regrank/generators.hpp"
#include "regrank/regularize.hpp"

namespace regrank {

namespace {

std::string format_value(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Eigen::VectorXd run_algorithm(const AlgorithmSpec& spec, const ComparisonDataset& train,
                              const FeatureSet* features) {
    const int n = train.item_count();
    const long long m_eff = std::max<long long>(train.size(), 1);
    switch (spec.kind) {
        case AlgorithmSpec::Kind::RankCentrality:
            return rank_centrality(train).scores;
        case AlgorithmSpec::Kind::LambdaRc:
            return regularized_rank_centrality(
                       train, lambda_regularizer(n, lambda_schedule(spec.eta, m_eff)))
                .scores;
        case AlgorithmSpec::Kind::DiffusionRc:
            return regularized_rank_centrality(train,
                                               diffusion_regularizer(*features, spec.sigma))
                .scores;
        case AlgorithmSpec::Kind::DecayedDiffusionRc:
            return regularized_rank_centrality(
                       train, decayed_mix(diffusion_regularizer(*features, spec.sigma), m_eff))
                .scores;
        case AlgorithmSpec::Kind::BtlMle:
            return btl_mle(train, spec.mle).scores;
    }
    throw ValidationError("run_algorithm: unknown algorithm kind");
}

double tau_or_zero(const Eigen::VectorXd& truth, const Eigen::VectorXd& estimate) {
    try {
        return kendall_tau_b(truth, estimate);
    } catch (const DegenerateInputError&) {
        return 0.0;  // a constant estimate carries no ordering information
    }
}

struct MetricAccumulator {
    std::vector<double> tau, l2, test;

    void add(const MetricRow& row) {
        if (row.kendall_tau) tau.push_back(*row.kendall_tau);
        if (row.l2_rel_err) l2.push_back(*row.l2_rel_err);
        if (row.test_err) test.push_back(*row.test_err);
    }
};

std::pair<double, double> mean_stderr(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace

bool AlgorithmSpec::needs_features() const {
    return kind == Kind::DiffusionRc || kind == Kind::DecayedDiffusionRc;
}

std::string AlgorithmSpec::name() const {
    switch (kind) {
        case Kind::RankCentrality: return "rc";
        case Kind::LambdaRc: return "lambda-rc";
        case Kind::DiffusionRc: return "diffusion-rc";
        case Kind::DecayedDiffusionRc: return "decayed-diffusion-rc";
        case Kind::BtlMle: return "mle";
    }
    return "?";
}

std::string AlgorithmSpec::params() const {
    switch (kind) {
        case Kind::RankCentrality: return "";
        case Kind::LambdaRc: return "eta=" + format_value(eta);
        case Kind::DiffusionRc:
        case Kind::DecayedDiffusionRc: return "sigma=" + format_value(sigma);
        case Kind::BtlMle: return "l2=" + format_value(mle.l2_strength);
    }
    return "";
}

std::pair<ComparisonDataset, ComparisonDataset> split_dataset(const ComparisonDataset& data,
                                                              double test_fraction,
                                                              std::uint64_t seed) {
    if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
        throw ValidationError("split_dataset: test_fraction must lie in [0, 1)");
    }
    const long long m = data.size();
    const long long train_size =
        static_cast<long long>(std::ceil(static_cast<double>(m) * (1.0 - test_fraction)));

    std::vector<long long> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Comparison> train, test;
    train.reserve(train_size);
    test.reserve(m - train_size);
    std::sort(order.begin(), order.begin() + train_size);
    std::sort(order.begin() + train_size, order.end());
    for (long long k = 0; k < m; ++k) {
        (k < train_size ? train : test).push_back(data.records()[order[k]]);
    }
    return {ComparisonDataset(data.item_count(), std::move(train)),
            ComparisonDataset(data.item_count(), std::move(test))};
}

std::vector<TrialOutcome> run_trial(const BtlScores& truth, const FeatureSet* features,
                                    const SamplingDistribution& mu, long long m,
                                    const std::vector<AlgorithmSpec>& algorithms,
                                    std::uint64_t seed, double test_fraction) {
    const int n = truth.size();
    if (mu.size() != n || (features && features->size() != n)) {
        throw ValidationError("run_trial: dimension mismatch");
    }
    for (const auto& spec : algorithms) {
        if (spec.needs_features() && !features) {
            throw ValidationError("run_trial: algorithm '" + spec.name() +
                                  "' requires features");
        }
    }

    const ComparisonDataset dataset = sample_comparisons(truth, mu, m, seed);
    ComparisonDataset train = dataset;
    std::optional<ComparisonDataset> test;
    if (test_fraction > 0.0) {
        auto [tr, te] = split_dataset(dataset, test_fraction, seed ^ 0x9e3779b97f4a7c15ULL);
        train = std::move(tr);
        if (!te.empty()) test = std::move(te);
    }

    std::vector<TrialOutcome> outcomes;
    outcomes.reserve(algorithms.size());
    for (const auto& spec : algorithms) {
        TrialOutcome out{spec.name(), spec.params(), {}};
        Eigen::VectorXd scores;
        try {
            scores = run_algorithm(spec, train, features);
        } catch (const NotErgodicError&) {
            scores = Eigen::VectorXd::Constant(n, 1.0 / n);
            out.metrics.failed = true;
        } catch (const MaxIterationsError& e) {
            // Score the unconverged iterate rather than aborting the sweep.
            scores = Eigen::Map<const Eigen::VectorXd>(e.last_iterate.data(),
                                                       static_cast<int>(e.last_iterate.size()));
            scores /= scores.sum();
            out.metrics.failed = true;
        }
        out.metrics.kendall_tau = tau_or_zero(truth.weights(), scores);
        out.metrics.l2_rel_err = relative_l2_error(scores, truth.weights());
        if (test) {
            out.metrics.test_err = pairwise_test_error(scores, *test);
        }
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

SweepOutput run_sweep(const RunConfig& config) {
    config.validate();

    // Instance from the generator spec.
    std::optional<FeatureSet> features;
    std::optional<BtlScores> truth;
    if (config.generator == "random") {
        truth = scores_random_exp(config.n > 0 ? config.n : 200, config.seed);
    } else if (config.generator == "linear") {
        truth = scores_linear(config.n > 0 ? config.n : 200);
    } else if (config.generator == "exp-a") {
        auto g = generate_experiment_a(config.seed, config.n > 0 ? config.n : 1600);
        features = std::move(g.features);
        truth = std::move(g.scores);
    } else if (config.generator == "exp-b") {
        auto g = generate_experiment_b(config.seed, config.n > 0 ? config.n : 1000);
        features = std::move(g.features);
        truth = std::move(g.scores);
    } else if (config.generator == "clustered") {
        auto g = generate_clustered(config.clusters, config.cluster_size, config.separation,
                                    config.seed);
        features = std::move(g.features);
        truth = std::move(g.scores);
    }
    const int n = truth->size();
    const SamplingDistribution mu = uniform_mu(n);

    // Algorithm grid expansion, in config order.
    std::vector<AlgorithmSpec> specs;
    for (const auto& name : config.algorithms) {
        if (name == "rc") {
            specs.push_back({AlgorithmSpec::Kind::RankCentrality});
        } else if (name == "lambda-rc") {
            for (double eta : config.eta_grid) {
                AlgorithmSpec s{AlgorithmSpec::Kind::LambdaRc};
                s.eta = eta;
                specs.push_back(s);
            }
        } else if (name == "diffusion-rc" || name == "decayed-diffusion-rc") {
            if (!features) {
                throw ValidationError("config: generator '" + config.generator +
                                      "' provides no features for '" + name + "'");
            }
            for (double sigma : config.sigma_grid) {
                AlgorithmSpec s{name == "diffusion-rc"
                                    ? AlgorithmSpec::Kind::DiffusionRc
                                    : AlgorithmSpec::Kind::DecayedDiffusionRc};
                s.sigma = sigma;
                specs.push_back(s);
            }
        } else if (name == "mle") {
            AlgorithmSpec s{AlgorithmSpec::Kind::BtlMle};
            s.mle.l2_strength = config.mle_l2;
            specs.push_back(s);
        }
    }

    SweepOutput out;
    const FeatureSet* feat = features ? &*features : nullptr;
    for (long long m : config.m_grid) {
        std::map<std::pair<std::string, std::string>, MetricAccumulator> acc;
        for (int trial = 0; trial < config.repeats; ++trial) {
            const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(trial);
            const auto outcomes =
                run_trial(*truth, feat, mu, m, specs, trial_seed, config.test_fraction);
            for (const auto& o : outcomes) {
                out.raw.push_back({m, trial, o.algorithm, o.params, o.metrics.kendall_tau,
                                   o.metrics.l2_rel_err, o.metrics.test_err});
                acc[{o.algorithm, o.params}].add(o.metrics);
            }
        }

        // Aggregate rows in spec order, then best-of-grid per gridded kind.
        std::vector<AggregateRow> rows;
        for (const auto& spec : specs) {
            const auto& a = acc.at({spec.name(), spec.params()});
            AggregateRow row{};
            row.m = m;
            row.algorithm = spec.name();
            row.params = spec.params();
            row.trials = config.repeats;
            std::tie(row.kendall_tau_mean, row.kendall_tau_stderr) = mean_stderr(a.tau);
            if (!a.l2.empty()) {
                auto [mean, se] = mean_stderr(a.l2);
                row.l2_rel_err_mean = mean;
                row.l2_rel_err_stderr = se;
            }
            if (!a.test.empty()) {
                auto [mean, se] = mean_stderr(a.test);
                row.test_err_mean = mean;
                row.test_err_stderr = se;
            }
            rows.push_back(std::move(row));
        }
        std::map<std::string, int> grid_sizes;
        for (const auto& spec : specs) grid_sizes[spec.name()]++;
        std::map<std::string, std::size_t> best;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            auto it = best.find(rows[k].algorithm);
            if (it == best.end() ||
                rows[k].kendall_tau_mean > rows[it->second].kendall_tau_mean) {
                best[rows[k].algorithm] = k;
            }
        }
        std::vector<AggregateRow> best_rows;
        for (const auto& [name, index] : best) {
            if (grid_sizes[name] < 2) continue;
            AggregateRow row = rows[index];
            row.algorithm += "[best]";
            best_rows.push_back(std::move(row));
        }
        for (auto& row : rows) out.aggregates.push_back(std::move(row));
        for (auto& row : best_rows) out.aggregates.push_back(std::move(row));

        if (config.power_density_t > 0 && feat) {
            const ComparisonDataset density_data = sample_comparisons(*truth, mu, m, config.seed);
            const TransitionMatrix qhat = empirical_transition_matrix(density_data);
            const Regularizer d = diffusion_regularizer(*feat, config.sigma_grid.front());
            const TransitionMatrix qd = apply_regularizer(qhat, d);
            out.density.push_back(
                {m, "qhat", config.power_density_t,
                 matrix_power_density(qhat, config.power_density_t)});
            out.density.push_back(
                {m, "qhat_d", config.power_density_t,
                 matrix_power_density(qd, config.power_density_t)});
        }
    }
    return out;
}

}  // namespace regrank

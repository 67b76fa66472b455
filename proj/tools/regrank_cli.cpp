// Command-line front end: simulate / rank / eval / sweep / bounds.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation error,
// 3 algorithmic failure (non-ergodic chain). Data goes to standard output,
// diagnostics to standard error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "regrank/bounds.hpp"
#include "regrank/experiment.hpp"
#include "regrank/generators.hpp"
#include "regrank/io.hpp"
#include "regrank/metrics.hpp"
#include "regrank/rank.hpp"
#include "regrank/regularize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAlgorithm = 3;

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct SimulateArgs {
    int n = 0;
    long long m = 0;
    std::string scores_kind = "random";
    std::uint64_t seed = 0;
    std::string out_comparisons, out_truth, out_features;
    int clusters = 10;
    int cluster_size = 10;
    double separation = 1000.0;
};

int cmd_simulate(const SimulateArgs& a) {
    std::optional<regrank::FeatureSet> features;
    std::optional<regrank::BtlScores> truth;
    if (a.scores_kind == "random") {
        truth = regrank::scores_random_exp(a.n > 0 ? a.n : 200, a.seed);
    } else if (a.scores_kind == "linear") {
        truth = regrank::scores_linear(a.n > 0 ? a.n : 200);
    } else if (a.scores_kind == "exp-a") {
        auto g = regrank::generate_experiment_a(a.seed, a.n > 0 ? a.n : 1600);
        features = std::move(g.features);
        truth = std::move(g.scores);
    } else if (a.scores_kind == "exp-b") {
        auto g = regrank::generate_experiment_b(a.seed, a.n > 0 ? a.n : 1000);
        features = std::move(g.features);
        truth = std::move(g.scores);
    } else if (a.scores_kind == "clustered") {
        auto g = regrank::generate_clustered(a.clusters, a.cluster_size, a.separation, a.seed);
        features = std::move(g.features);
        truth = std::move(g.scores);
    } else {
        throw regrank::ValidationError("unknown score generator '" + a.scores_kind + "'");
    }

    const auto mu = regrank::uniform_mu(truth->size());
    // Comparison draws use an offset seed so they do not replay the
    // generator's random stream.
    const auto data = regrank::sample_comparisons(*truth, mu, a.m, a.seed + 1);
    regrank::write_comparisons(a.out_comparisons, data);

    regrank::RankingResult truth_result;
    truth_result.scores = truth->weights();
    truth_result.ranking = regrank::ranking_from_scores(truth_result.scores);
    regrank::write_scores(a.out_truth, truth_result);

    if (!a.out_features.empty()) {
        if (!features) {
            throw regrank::ValidationError("generator '" + a.scores_kind +
                                           "' produces no features");
        }
        regrank::write_features(a.out_features, *features);
    }
    return kExitOk;
}

struct RankArgs {
    std::string comparisons;
    int n_override = 0;
    std::string regularizer = "none";
    std::optional<double> lambda;
    std::optional<double> eta;
    double sigma = 0.25;
    std::string features_path;
    std::string out;
};

int cmd_rank(const RankArgs& a) {
    const auto data = regrank::read_comparisons(a.comparisons, a.n_override);
    const int n = data.item_count();
    const long long m_eff = std::max<long long>(data.size(), 1);

    std::optional<regrank::Regularizer> reg;
    if (a.regularizer == "none") {
        // unregularized path below
    } else if (a.regularizer == "lambda") {
        if (a.lambda && a.eta) {
            throw regrank::ValidationError("give either --lambda or --eta, not both");
        }
        if (!a.lambda && !a.eta) {
            throw regrank::ValidationError("--regularizer lambda needs --lambda or --eta");
        }
        const double lambda = a.lambda ? *a.lambda : regrank::lambda_schedule(*a.eta, m_eff);
        reg = regrank::lambda_regularizer(n, lambda);
    } else if (a.regularizer == "diffusion" || a.regularizer == "decayed-diffusion") {
        if (a.features_path.empty()) {
            throw regrank::ValidationError("--regularizer " + a.regularizer +
                                           " requires --features");
        }
        const auto features = regrank::read_features(a.features_path);
        if (features.size() != n) {
            throw regrank::ValidationError("features cover " + std::to_string(features.size()) +
                                           " items, comparisons cover " + std::to_string(n));
        }
        reg = regrank::diffusion_regularizer(features, a.sigma);
        if (a.regularizer == "decayed-diffusion") {
            reg = regrank::decayed_mix(*reg, m_eff);
        }
    } else {
        throw regrank::ValidationError("unknown regularizer '" + a.regularizer + "'");
    }

    regrank::RankingResult result;
    try {
        result = reg ? regrank::regularized_rank_centrality(data, *reg)
                     : regrank::rank_centrality(data);
    } catch (const regrank::NotErgodicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (a.regularizer == "none") {
            std::cerr << "hint: rerun with --regularizer lambda --lambda 0.1 to guarantee "
                         "an ergodic chain\n";
        }
        return kExitAlgorithm;
    }
    regrank::write_scores(a.out, result);
    std::cerr << "algorithm=" << result.algorithm << " iterations=" << result.iterations
              << " ergodic=true\n";
    return kExitOk;
}

struct EvalArgs {
    std::string scores;
    std::string truth;
    std::string test_comparisons;
};

int cmd_eval(const EvalArgs& a) {
    if (a.truth.empty() && a.test_comparisons.empty()) {
        throw regrank::ValidationError("eval needs --truth and/or --test-comparisons");
    }
    const auto scores = regrank::read_scores(a.scores);
    std::string tau, l2, test;
    if (!a.truth.empty()) {
        const auto truth = regrank::read_scores(a.truth);
        tau = format17(regrank::kendall_tau_b(truth, scores));
        l2 = format17(regrank::relative_l2_error(scores, truth));
    }
    if (!a.test_comparisons.empty()) {
        const auto test_set = regrank::read_comparisons(a.test_comparisons,
                                                        static_cast<int>(scores.size()));
        test = format17(regrank::pairwise_test_error(scores, test_set));
    }
    std::cout << "kendall_tau,l2_rel_err,test_err\n" << tau << ',' << l2 << ',' << test << '\n';
    return kExitOk;
}

int cmd_sweep(const std::string& config_path) {
    const auto config = regrank::read_run_config(config_path);
    const auto result = regrank::run_sweep(config);
    regrank::write_sweep(config.output + "_raw.csv", result.raw);
    regrank::write_aggregates(config.output + "_agg.csv", result.aggregates);
    if (!result.density.empty()) {
        regrank::write_density(config.output + "_density.csv", result.density);
    }
    std::cerr << "sweep: " << result.raw.size() << " raw rows, " << result.aggregates.size()
              << " aggregate rows\n";
    return kExitOk;
}

struct BoundsArgs {
    regrank::BoundInputs in;
    bool have_lambda = false;
    bool have_m = false;
};

int cmd_bounds(const BoundsArgs& a) {
    std::cout << "quantity,value\n";
    std::cout << "spectral_gap_lower_bound," << format17(regrank::spectral_gap_lower_bound(a.in))
              << '\n';
    const double gamma = regrank::gamma_value(a.in);
    std::cout << "gamma," << format17(gamma) << '\n';
    std::cout << "rc_sample_complexity," << regrank::rc_sample_complexity(a.in) << '\n';
    if (a.have_lambda) {
        std::cout << "bias_bound," << format17(regrank::bias_bound(a.in.lambda, gamma)) << '\n';
        std::cout << "reg_rc_sample_complexity," << regrank::reg_rc_sample_complexity(a.in)
                  << '\n';
        if (a.have_m) {
            std::cout << "reg_rc_error_bound," << format17(regrank::reg_rc_error_bound(a.in))
                      << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral rank aggregation from pairwise comparisons"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Generate synthetic scores and comparisons");
    simulate->add_option("--n", sim.n, "item count (0 = generator default)");
    simulate->add_option("--m", sim.m, "comparison count")->required();
    simulate->add_option("--scores", sim.scores_kind,
                         "generator: random|linear|exp-a|exp-b|clustered");
    simulate->add_option("--seed", sim.seed, "random seed")->required();
    simulate->add_option("--out-comparisons", sim.out_comparisons)->required();
    simulate->add_option("--out-truth", sim.out_truth)->required();
    simulate->add_option("--out-features", sim.out_features);
    simulate->add_option("--clusters", sim.clusters);
    simulate->add_option("--cluster-size", sim.cluster_size);
    simulate->add_option("--separation", sim.separation);

    RankArgs rank;
    auto* rank_cmd = app.add_subcommand("rank", "Rank items from a comparison file");
    rank_cmd->add_option("--comparisons", rank.comparisons)->required();
    rank_cmd->add_option("--n", rank.n_override, "item count override");
    rank_cmd->add_option("--regularizer", rank.regularizer,
                         "none|lambda|diffusion|decayed-diffusion");
    double lambda_val = 0.0, eta_val = 0.0;
    auto* lambda_opt = rank_cmd->add_option("--lambda", lambda_val, "mixing weight in [0,1]");
    auto* eta_opt = rank_cmd->add_option("--eta", eta_val, "decay coefficient: lambda = eta/sqrt(m)");
    rank_cmd->add_option("--sigma", rank.sigma, "diffusion kernel width");
    rank_cmd->add_option("--features", rank.features_path);
    rank_cmd->add_option("--out", rank.out)->required();

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Score an estimate against references");
    eval_cmd->add_option("--scores", eval.scores)->required();
    eval_cmd->add_option("--truth", eval.truth);
    eval_cmd->add_option("--test-comparisons", eval.test_comparisons);

    std::string config_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a configured experiment sweep");
    sweep_cmd->add_option("--config", config_path)->required();

    BoundsArgs bounds;
    double lambda_b = 0.0;
    long long m_b = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bound calculators");
    bounds_cmd->add_option("--n", bounds.in.n)->required();
    bounds_cmd->add_option("--b", bounds.in.b)->required();
    bounds_cmd->add_option("--mu-min", bounds.in.mu_min)->required();
    bounds_cmd->add_option("--mu-max", bounds.in.mu_max)->required();
    bounds_cmd->add_option("--eps", bounds.in.epsilon)->required();
    bounds_cmd->add_option("--delta", bounds.in.delta)->required();
    auto* lambda_b_opt = bounds_cmd->add_option("--lambda", lambda_b);
    auto* m_b_opt = bounds_cmd->add_option("--m", m_b);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*simulate) return cmd_simulate(sim);
        if (*rank_cmd) {
            if (lambda_opt->count()) rank.lambda = lambda_val;
            if (eta_opt->count()) rank.eta = eta_val;
            return cmd_rank(rank);
        }
        if (*eval_cmd) return cmd_eval(eval);
        if (*sweep_cmd) return cmd_sweep(config_path);
        if (*bounds_cmd) {
            bounds.have_lambda = lambda_b_opt->count() > 0;
            bounds.have_m = m_b_opt->count() > 0;
            if (bounds.have_lambda) bounds.in.lambda = lambda_b;
            if (bounds.have_m) bounds.in.m = m_b;
            return cmd_bounds(bounds);
        }
    } catch (const regrank::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const regrank::NotErgodicError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgorithm;
    } catch (const std::exception& e) {
        // ValidationError, ParseError, HypothesisViolatedError, bad flags.
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

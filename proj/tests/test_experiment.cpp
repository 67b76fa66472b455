#include <doctest.h>

#include <cmath>
#include <set>

#include "regrank/experiment.hpp"
#include "regrank/generators.hpp"

using namespace regrank;

TEST_CASE("run_trial marks non-ergodic runs as failed") {
    const auto w = scores_linear(6);
    const auto mu = uniform_mu(6);
    // m = 1 cannot connect 6 items
    const auto outcomes =
        run_trial(w, nullptr, mu, 1, {{AlgorithmSpec::Kind::RankCentrality}}, 3);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].metrics.failed);
    CHECK(outcomes[0].metrics.kendall_tau == 0.0);  // uniform fallback, tau convention
    CHECK(outcomes[0].metrics.l2_rel_err.has_value());
}

TEST_CASE("run_trial is deterministic in the seed") {
    const auto w = scores_linear(8);
    const auto mu = uniform_mu(8);
    const std::vector<AlgorithmSpec> algs = {
        {AlgorithmSpec::Kind::RankCentrality},
        {AlgorithmSpec::Kind::LambdaRc},
        {AlgorithmSpec::Kind::BtlMle},
    };
    const auto a = run_trial(w, nullptr, mu, 200, algs, 42);
    const auto b = run_trial(w, nullptr, mu, 200, algs, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].metrics.kendall_tau == b[k].metrics.kendall_tau);
        CHECK(a[k].metrics.l2_rel_err == b[k].metrics.l2_rel_err);
    }
    const auto c = run_trial(w, nullptr, mu, 200, algs, 43);
    bool any_diff = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        any_diff |= a[k].metrics.l2_rel_err != c[k].metrics.l2_rel_err;
    }
    CHECK(any_diff);
}

TEST_CASE("run_trial requires features for diffusion algorithms") {
    const auto w = scores_linear(4);
    const auto mu = uniform_mu(4);
    CHECK_THROWS_AS(run_trial(w, nullptr, mu, 10, {{AlgorithmSpec::Kind::DiffusionRc}}, 1),
                    ValidationError);
}

TEST_CASE("run_trial computes test error when a split is requested") {
    const auto w = scores_linear(5);
    const auto mu = uniform_mu(5);
    const auto outcomes =
        run_trial(w, nullptr, mu, 400, {{AlgorithmSpec::Kind::LambdaRc}}, 11, 0.25);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].metrics.test_err.has_value());
    CHECK(*outcomes[0].metrics.test_err >= 0.0);
    CHECK(*outcomes[0].metrics.test_err <= 1.0);

    const auto no_split =
        run_trial(w, nullptr, mu, 400, {{AlgorithmSpec::Kind::LambdaRc}}, 11, 0.0);
    CHECK_FALSE(no_split[0].metrics.test_err.has_value());
}

TEST_CASE("split_dataset sizes and partition") {
    std::vector<Comparison> records;
    for (int k = 0; k < 10; ++k) records.push_back({0, 1 + k % 3, k % 2});
    const ComparisonDataset data(4, records);

    const auto [train, test] = split_dataset(data, 0.3, 5);
    CHECK(train.size() == 7);  // ceil(10 * 0.7)
    CHECK(test.size() == 3);
    CHECK(train.size() + test.size() == data.size());

    const auto [t2, e2] = split_dataset(data, 0.0, 5);
    CHECK(t2.size() == 10);
    CHECK(e2.size() == 0);

    CHECK_THROWS_AS(split_dataset(data, 1.0, 5), ValidationError);
    CHECK_THROWS_AS(split_dataset(data, -0.1, 5), ValidationError);

    // determinism
    const auto [t3, e3] = split_dataset(data, 0.3, 5);
    REQUIRE(t3.size() == train.size());
    for (long long k = 0; k < t3.size(); ++k) {
        CHECK(t3.records()[k].i == train.records()[k].i);
        CHECK(t3.records()[k].j == train.records()[k].j);
        CHECK(t3.records()[k].y == train.records()[k].y);
    }
}

TEST_CASE("run_sweep cardinality and aggregates") {
    RunConfig cfg;
    cfg.seed = 10;
    cfg.generator = "linear";
    cfg.n = 12;
    cfg.m_grid = {50, 100};
    cfg.repeats = 4;
    cfg.algorithms = {"rc", "lambda-rc"};
    cfg.eta_grid = {1.0 / 6, 1.0 / 3};
    cfg.output = "unused";

    const auto out = run_sweep(cfg);
    // raw rows: 2 m-values x 4 trials x (1 rc + 2 lambda-rc)
    CHECK(out.raw.size() == 2 * 4 * 3);
    // aggregates: 3 per m, plus one [best] row for the gridded lambda-rc
    CHECK(out.aggregates.size() == 2 * (3 + 1));

    // aggregate mean equals the arithmetic mean of per-trial rows
    for (const auto& agg : out.aggregates) {
        if (agg.algorithm.find("[best]") != std::string::npos) continue;
        double total = 0.0;
        int count = 0;
        for (const auto& r : out.raw) {
            if (r.m == agg.m && r.algorithm == agg.algorithm && r.params == agg.params) {
                total += *r.kendall_tau;
                ++count;
            }
        }
        REQUIRE(count == cfg.repeats);
        CHECK(agg.kendall_tau_mean == doctest::Approx(total / count).epsilon(1e-14));
    }

    // the [best] row carries the grid maximum
    for (long long m : cfg.m_grid) {
        double best_mean = -2.0;
        double best_row = -3.0;
        for (const auto& agg : out.aggregates) {
            if (agg.m != m) continue;
            if (agg.algorithm == "lambda-rc") best_mean = std::max(best_mean, agg.kendall_tau_mean);
            if (agg.algorithm == "lambda-rc[best]") best_row = agg.kendall_tau_mean;
        }
        CHECK(best_row == best_mean);
    }
}

TEST_CASE("run_sweep determinism and per-trial seeds") {
    RunConfig cfg;
    cfg.seed = 77;
    cfg.generator = "linear";
    cfg.n = 10;
    cfg.m_grid = {60};
    cfg.repeats = 3;
    cfg.algorithms = {"rc"};
    cfg.output = "unused";

    const auto a = run_sweep(cfg);
    const auto b = run_sweep(cfg);
    REQUIRE(a.raw.size() == b.raw.size());
    for (std::size_t k = 0; k < a.raw.size(); ++k) {
        CHECK(a.raw[k].kendall_tau == b.raw[k].kendall_tau);
        CHECK(a.raw[k].l2_rel_err == b.raw[k].l2_rel_err);
    }

    // trial t of a run seeded s equals trial 0 of a run seeded s + t
    RunConfig shifted = cfg;
    shifted.seed = 79;
    shifted.repeats = 1;
    const auto c = run_sweep(shifted);
    CHECK(c.raw[0].l2_rel_err == a.raw[2].l2_rel_err);
}

TEST_CASE("run_sweep validates its config") {
    RunConfig cfg;
    cfg.algorithms = {"rc"};
    cfg.output = "unused";
    CHECK_THROWS_AS(run_sweep(cfg), ValidationError);  // empty m_grid

    cfg.m_grid = {10};
    cfg.generator = "linear";
    cfg.algorithms = {"diffusion-rc"};
    CHECK_THROWS_AS(run_sweep(cfg), ValidationError);  // generator has no features
}

TEST_CASE("run_sweep emits density rows for clustered instances") {
    RunConfig cfg;
    cfg.seed = 4;
    cfg.generator = "clustered";
    cfg.clusters = 10;
    cfg.cluster_size = 10;
    cfg.separation = 1000.0;
    cfg.m_grid = {200};
    cfg.repeats = 2;
    cfg.algorithms = {"diffusion-rc"};
    cfg.sigma_grid = {0.5};
    cfg.power_density_t = 50;
    cfg.output = "unused";

    const auto out = run_sweep(cfg);
    REQUIRE(out.density.size() == 2);
    CHECK(out.density[0].matrix == "qhat");
    CHECK(out.density[1].matrix == "qhat_d");
    // the regularized 50-step chain is strictly denser
    CHECK(out.density[1].zero_fraction < out.density[0].zero_fraction);
}

TEST_CASE("lambda-regularized rc beats plain rc at small m on a large instance") {
    // qualitative check over a modest number of trials
    RunConfig cfg;
    cfg.seed = 1;
    cfg.generator = "linear";
    cfg.n = 200;
    cfg.m_grid = {300};
    cfg.repeats = 10;
    cfg.algorithms = {"rc", "lambda-rc"};
    cfg.eta_grid = {1.0 / 6};
    cfg.output = "unused";

    const auto out = run_sweep(cfg);
    double rc_mean = -2.0, lrc_mean = -2.0;
    for (const auto& agg : out.aggregates) {
        if (agg.algorithm == "rc") rc_mean = agg.kendall_tau_mean;
        if (agg.algorithm == "lambda-rc") lrc_mean = agg.kendall_tau_mean;
    }
    CHECK(lrc_mean >= rc_mean);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "costboost/boosters.hpp"
#include "costboost/metrics.hpp"
#include "test_util.hpp"

using namespace costboost;
using namespace costboost::testutil;

namespace {

Dataset identical_feature_dataset(std::vector<int> labels) {
    std::vector<std::vector<double>> feats(labels.size(), {5.0});
    return Dataset::make(std::move(feats), std::move(labels));
}

}  // namespace

TEST_CASE("alpha_from_error spot values and antisymmetry") {
    CHECK(alpha_from_error(0.5) == doctest::Approx(0.0));
    CHECK(alpha_from_error(0.25) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-12));
    CHECK(alpha_from_error(0.25) == doctest::Approx(0.549306).epsilon(1e-6));
    CHECK(alpha_from_error(0.75) == doctest::Approx(-0.549306).epsilon(1e-6));
    for (double e : {0.01, 0.2, 0.37, 0.49})
        CHECK(alpha_from_error(e) == doctest::Approx(-alpha_from_error(1.0 - e)).epsilon(1e-13));
    CHECK(std::isfinite(alpha_from_error(0.0)));
    CHECK(std::isfinite(alpha_from_error(1.0)));
}

TEST_CASE("bayes threshold") {
    CHECK(bayes_threshold(CostSpec{3.0, 3.0, {}}) == doctest::Approx(0.0));
    CHECK(bayes_threshold(CostSpec{2.0, 1.0, {}}) ==
          doctest::Approx(std::log(0.5)).epsilon(1e-13));
    CHECK(bayes_threshold(CostSpec{2.0, 1.0, {}}) ==
          doctest::Approx(bayes_threshold(CostSpec{14.0, 7.0, {}})).epsilon(1e-13));
}

TEST_CASE("adaboost on a separable set trains one perfect stump") {
    auto ds = Dataset::make({{1.0}, {2.0}, {3.0}, {4.0}}, {+1, +1, -1, -1});
    auto pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaBoost, 1, 1.0, 1.0);
    auto model = train_adaboost(config, ds, pool);
    REQUIRE(model.trace.size() == 1);
    CHECK(model.trace[0].epsilon == 0.0);
    CHECK(model.trace[0].train_error == 0.0);
    const double alpha_clamped = 0.5 * std::log((1.0 - 1e-12) / 1e-12);
    CHECK(model.trace[0].alpha == doctest::Approx(alpha_clamped).epsilon(1e-12));
    // with a perfect stump the normalizer collapses to e^-alpha
    CHECK(model.trace[0].z ==
          doctest::Approx(std::exp(-alpha_clamped)).epsilon(1e-9));
    CHECK(model.ensemble.members[0].second.threshold == doctest::Approx(2.5));
}

TEST_CASE("adaboost forced geometry: threshold 2.5 in round one, training continues") {
    auto ds = Dataset::make({{1.0}, {2.0}, {3.0}, {4.0}}, {+1, +1, -1, -1});
    auto pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaBoost, 3, 1.0, 1.0);
    auto model = train_adaboost(config, ds, pool);
    REQUIRE(model.trace.size() == 3);
    CHECK(model.ensemble.members[0].second.threshold == doctest::Approx(2.5));
    CHECK(model.trace[0].epsilon == 0.0);
    for (const auto& t : model.trace) CHECK(std::isfinite(t.alpha));
    for (const auto& w : model.weight_history)
        for (double v : w) CHECK(v >= 0.0);
}

TEST_CASE("error bound dominates the weighted training error round by round") {
    const Dataset ds = overlapping_blobs(101, 20, 20);
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaBoost, 20, 1.0, 1.0);
    const TrainedModel model = train_adaboost(config, ds, pool);

    // independent recomputation of both sides per round
    std::vector<double> score(ds.size(), 0.0);
    double z_product = 1.0;
    for (std::size_t t = 0; t < model.trace.size(); ++t) {
        const auto& [alpha, stump] = model.ensemble.members[t];
        for (std::size_t i = 0; i < ds.size(); ++i)
            score[i] += alpha * stump.predict(ds.features[i]);
        double err = 0.0, bound = 0.0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const int label = score[i] >= 0.0 ? +1 : -1;
            if (label != ds.labels[i]) err += 1.0 / ds.size();
            bound += std::exp(-ds.labels[i] * score[i]) / ds.size();
        }
        CHECK(err <= bound + 1e-12);
        z_product *= model.trace[t].z;
        CHECK(bound == doctest::Approx(z_product).epsilon(1e-9));
        CHECK(model.trace[t].bound == doctest::Approx(bound).epsilon(1e-9));
        const double eps = model.trace[t].epsilon;
        CHECK(model.trace[t].z ==
              doctest::Approx(2.0 * std::sqrt(eps * (1.0 - eps))).epsilon(1e-9));
    }
}

TEST_CASE("tune_threshold leaves a symmetric optimum at zero") {
    const Dataset ds = overlapping_blobs(7, 15, 15);
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaBoost, 10, 1.0, 1.0);
    const TrainedModel model = train_adaboost(config, ds, pool);

    // scores of a separable validation set around zero
    auto validation = Dataset::make({{-9.0}, {-8.0}, {8.0}, {9.0}}, {-1, -1, +1, +1});
    // model trained on 2-d data cannot score 1-d rows; reuse training data
    Ensemble tuned = tune_threshold(model, ds, CostSpec{1.0, 1.0, {}});
    const Ensemble same = tune_threshold(model, ds, CostSpec{1.0, 1.0, {}});
    CHECK(tuned.threshold == same.threshold);
    (void)validation;
}

TEST_CASE("tune_threshold picks the zero midpoint between separable scores") {
    // single stump sign(x) scaled by 2: scores are -2,-1? craft via two stumps
    Ensemble e;
    e.members = {{1.5, Stump{Stump::Kind::Threshold, 0, 0.0, +1, +1}},
                 {0.5, Stump{Stump::Kind::Threshold, 0, -5.0, +1, +1}}};
    // x >= 0: 1.5 + 0.5 = 2; x in [-5, 0): -1.5 + 0.5 = -1; x < -5: -2
    TrainedModel model;
    model.ensemble = e;
    auto validation = Dataset::make({{1.0}, {2.0}, {-1.0}, {-6.0}}, {+1, +1, -1, -1});
    const Ensemble tuned = tune_threshold(model, validation, CostSpec{3.0, 1.0, {}});
    CHECK(tuned.threshold == doctest::Approx(0.5));  // midpoint of -1 and 2
    // both classes perfectly split at any phi in (-1, 2]; 0.5 has smallest |phi|
}

TEST_CASE("tune_threshold matches an exhaustive grid oracle") {
    const Dataset train_set = overlapping_blobs(19, 12, 12);
    const StumpPool pool = build_pool(train_set);
    auto config = make_config(Algorithm::AdaBoost, 8, 1.0, 1.0);
    const TrainedModel model = train_adaboost(config, train_set, pool);
    const Dataset validation = overlapping_blobs(20, 25, 25);
    const CostSpec costs{5.0, 1.0, {}};
    const Ensemble tuned = tune_threshold(model, validation, costs);

    auto empirical_cost = [&](double phi) {
        double fn = 0.0, fp = 0.0;
        for (std::size_t i = 0; i < validation.size(); ++i) {
            const double s = model.ensemble.score(validation.features[i]);
            const int label = s - phi >= 0.0 ? +1 : -1;
            if (label != validation.labels[i]) {
                if (i < validation.positives)
                    fn += 1.0;
                else
                    fp += 1.0;
            }
        }
        return costs.c_pos * fn / validation.positives +
               costs.c_neg * fp / validation.negatives();
    };
    const double tuned_cost = empirical_cost(tuned.threshold);
    double lo = -10.0, hi = 10.0;
    for (int k = 0; k <= 10000; ++k) {
        const double phi = lo + (hi - lo) * k / 10000.0;
        CHECK(tuned_cost <= empirical_cost(phi) + 1e-12);
    }
}

TEST_CASE("tune_threshold on four separable scores lands on zero") {
    // scores over the validation set come out as -2, -1 (negatives) and 1, 2
    // (positives); every cost choice then picks the zero midpoint
    Ensemble e;
    e.members = {{0.5, Stump{Stump::Kind::Threshold, 0, 1.5, +1, +1}},
                 {1.0, Stump{Stump::Kind::Threshold, 0, 2.5, +1, +1}},
                 {0.5, Stump{Stump::Kind::Threshold, 0, 3.5, +1, +1}}};
    TrainedModel model;
    model.ensemble = e;
    auto validation = Dataset::make({{3.0}, {4.0}, {1.0}, {2.0}}, {+1, +1, -1, -1});
    for (auto [cp, cn] : {std::pair{1.0, 1.0}, {7.0, 3.0}, {1.0, 9.0}}) {
        const Ensemble tuned = tune_threshold(model, validation, CostSpec{cp, cn, {}});
        CHECK(tuned.threshold == doctest::Approx(0.0));
    }
}

TEST_CASE("tune_threshold rejects cost-vote ensembles") {
    TrainedModel model;
    model.ensemble.voting = Voting::CsbCostVote;
    model.ensemble.members = {{1.0, Stump{Stump::Kind::Constant, 0, 0.0, +1, +1}}};
    auto ds = Dataset::make({{0.0}, {1.0}}, {+1, -1});
    CHECK_THROWS_AS(tune_threshold(model, ds, CostSpec{1.0, 1.0, {}}), InputError);
}

TEST_CASE("asymboost with equal costs reduces to adaboost") {
    const Dataset ds = overlapping_blobs(23, 15, 15);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 12, 1.0, 1.0), ds, pool);
    auto asym = train_asymboost(make_config(Algorithm::AsymBoost, 12, 1.0, 1.0), ds, pool);
    const auto cmp = compare_runs(base, asym, 1e-10, 1e-10);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}

TEST_CASE("asymboost pre-emphasis follows the per-round factor") {
    // one example per class, T=2, costs 4:1. The factor is (4)^(y/4), so the
    // normalized start weights are sqrt(2)/(sqrt(2)+1/sqrt(2)) = 2/3 and 1/3.
    auto ds = Dataset::make({{0.0}, {1.0}}, {+1, -1});
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AsymBoost, 2, 4.0, 1.0);
    auto model = train_asymboost(config, ds, pool);
    REQUIRE(model.weight_history.size() >= 1);
    CHECK(model.weight_history[0][0] == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(model.weight_history[0][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("asymboost cumulative emphasis ratio equals the cost ratio") {
    for (int rounds : {1, 2, 5, 17}) {
        const double ratio = 4.0;
        const double f_pos = std::pow(ratio, 1.0 / (2.0 * rounds));
        const double f_neg = std::pow(ratio, -1.0 / (2.0 * rounds));
        const double total =
            std::pow(f_pos, rounds) / std::pow(f_neg, rounds);
        CHECK(total == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("adacost on a perfect stump uses the closed-form goodness") {
    auto ds = Dataset::make({{1.0}, {2.0}, {3.0}, {4.0}}, {+1, +1, -1, -1});
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaCost, 1, 1.0, 1.0);
    const double c = 0.3;
    config.cost_spec.example_costs.assign(4, c);
    auto model = train_adacost(config, ds, pool);
    REQUIRE(model.trace.size() == 1);
    // perfect stump: r = 0.5*(1-c), alpha = 0.5*log((1.5-0.5c)/(0.5+0.5c))
    const double expected = 0.5 * std::log((1.5 - 0.5 * c) / (0.5 + 0.5 * c));
    CHECK(model.trace[0].alpha == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("adacost does not reduce to adaboost at uniform costs") {
    // best stump has error 0.25 here, and the beta-weighted correlation comes
    // out exactly zero at c = 0.5, so the goodness differs from eq-9's value
    auto ds = Dataset::make({{1.0}, {3.0}, {2.0}, {4.0}}, {+1, +1, -1, -1});
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaCost, 1, 1.0, 1.0);
    config.cost_spec.example_costs.assign(4, 0.5);
    auto model = train_adacost(config, ds, pool);
    REQUIRE(model.trace.size() == 1);
    CHECK(model.trace[0].epsilon == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(model.trace[0].alpha == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(model.trace[0].alpha - alpha_from_error(0.25)) > 0.5);
}

TEST_CASE("adacost: costlier mistakes grow faster than cheaper ones") {
    // positives at 0.5 and 0.6 are both misclassified by the best stump; the
    // one with the higher cost must gain weight faster
    auto ds = Dataset::make({{0.5}, {0.6}, {10.0}, {11.0}, {12.0}, {1.0}, {2.0}, {3.0}},
                            {+1, +1, +1, +1, +1, -1, -1, -1});
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaCost, 2, 1.0, 1.0);
    config.cost_spec.example_costs = {0.6, 0.2, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
    auto model = train_adacost(config, ds, pool);
    REQUIRE(model.weight_history.size() == 2);
    const auto& stump = model.ensemble.members[0].second;
    REQUIRE(stump.predict(ds.features[0]) != ds.labels[0]);
    REQUIRE(stump.predict(ds.features[1]) != ds.labels[1]);
    REQUIRE(model.trace[0].alpha > 0.0);
    const double growth_high =
        model.weight_history[1][0] / model.weight_history[0][0];
    const double growth_low =
        model.weight_history[1][1] / model.weight_history[0][1];
    CHECK(growth_high > growth_low);
}

TEST_CASE("csb2 with unit costs reduces to adaboost") {
    const Dataset ds = overlapping_blobs(29, 14, 16);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 12, 1.0, 1.0), ds, pool);
    auto csb2 = train_csb(make_config(Algorithm::Csb2, 12, 1.0, 1.0), ds, pool, 2);
    const auto cmp = compare_runs(base, csb2, 1e-10, 1e-10);
    INFO(cmp.detail);
    CHECK(cmp.ok);
    // cost vote with unit costs decides like the weighted sum
    for (std::size_t i = 0; i < ds.size(); ++i)
        CHECK(predict(csb2.ensemble, ds.features[i]).label ==
              predict(base.ensemble, ds.features[i]).label);
}

TEST_CASE("csb0 multiplies only the misclassified weight by its class cost") {
    auto ds = identical_feature_dataset({+1, -1});
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::Csb0, 1, 2.0, 1.0);
    auto model = train_csb(config, ds, pool, 0);
    REQUIRE(model.trace.size() == 1);
    // init [2/3, 1/3]; all-positives constant wins (eps = 1/3); the wrong
    // negative is scaled by C_N = 1, so weights stay put after normalization
    CHECK(model.ensemble.members[0].second.kind == Stump::Kind::Constant);
    CHECK(model.ensemble.members[0].second.constant_sign == +1);
    CHECK(model.trace[0].epsilon == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(model.trace[0].alpha == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(model.trace[0].z == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("csb1 update does not involve the goodness parameter") {
    const Dataset ds = overlapping_blobs(31, 8, 8);
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::Csb1, 2, 3.0, 1.0);
    auto model = train_csb(config, ds, pool, 1);
    REQUIRE(model.weight_history.size() == 2);
    // recompute the round-2 weights by hand straight from the update rule,
    // with no alpha anywhere
    const auto& stump = model.ensemble.members[0].second;
    std::vector<double> expect = model.weight_history[0];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const int h = stump.predict(ds.features[i]);
        expect[i] *= std::exp(-static_cast<double>(ds.labels[i]) * h);
        if (h != ds.labels[i]) expect[i] *= i < ds.positives ? 3.0 : 1.0;
    }
    const double z = kahan_sum(expect);
    for (double& w : expect) w /= z;
    for (std::size_t i = 0; i < ds.size(); ++i)
        CHECK(model.weight_history[1][i] == doctest::Approx(expect[i]).epsilon(1e-13));
}

TEST_CASE("adac variants reduce to adaboost at unit cost") {
    const Dataset ds = overlapping_blobs(37, 15, 15);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 12, 1.0, 1.0), ds, pool);
    for (int variant : {1, 2, 3}) {
        const Algorithm algo = variant == 1   ? Algorithm::AdaC1
                               : variant == 2 ? Algorithm::AdaC2
                                              : Algorithm::AdaC3;
        auto run = train_adac(make_config(algo, 12, 1.0, 1.0), ds, pool, variant);
        const auto cmp = compare_runs(base, run, 1e-10, 1e-10);
        INFO("variant ", variant, ": ", cmp.detail);
        CHECK(cmp.ok);
    }
}

TEST_CASE("adac2 with a constant cost cancels the scale") {
    const Dataset ds = overlapping_blobs(41, 12, 12);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 8, 1.0, 1.0), ds, pool);
    auto config = make_config(Algorithm::AdaC2, 8, 1.0, 1.0);
    config.cost_spec.example_costs.assign(ds.size(), 0.5);
    auto run = train_adac(config, ds, pool, 2);
    REQUIRE(run.trace.size() == base.trace.size());
    for (std::size_t t = 0; t < run.trace.size(); ++t) {
        CHECK(run.ensemble.members[t].second == base.ensemble.members[t].second);
        CHECK(run.trace[t].alpha == doctest::Approx(base.trace[t].alpha).epsilon(1e-12));
    }
}

TEST_CASE("adac1 hand-computed goodness on a two-example set") {
    auto ds = identical_feature_dataset({+1, -1});
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaC1, 1, 1.0, 1.0);
    config.cost_spec.example_costs = {0.9, 0.3};
    auto model = train_adac(config, ds, pool, 1);
    REQUIRE(model.trace.size() == 1);
    // all-positives constant wins: W = 0.6, eps = 0.15,
    // alpha = 0.5 log(1.3/0.7)
    CHECK(model.ensemble.members[0].second.kind == Stump::Kind::Constant);
    CHECK(model.trace[0].epsilon == doctest::Approx(0.15).epsilon(1e-13));
    CHECK(model.trace[0].alpha ==
          doctest::Approx(0.5 * std::log(1.3 / 0.7)).epsilon(1e-12));
    CHECK(model.trace[0].alpha == doctest::Approx(0.3095).epsilon(1e-3));
}

TEST_CASE("cs_adaboost with unit costs reduces to adaboost") {
    const Dataset ds = overlapping_blobs(43, 15, 15);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 10, 1.0, 1.0), ds, pool);
    auto csa =
        train_cs_adaboost(make_config(Algorithm::CsAdaBoost, 10, 1.0, 1.0), ds, pool);
    const auto cmp = compare_runs(base, csa, 1e-10, 1e-10);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}

TEST_CASE("csa goodness matches a dense grid argmin of the round loss") {
    const double cp = 2.0, cn = 1.0, b = 0.1, d = 0.1, tp = 0.5, tn = 0.5;
    const double alpha = csa_alpha(cp, cn, b, d, tp, tn);
    double best_a = 0.0, best_l = csa_round_loss(0.0, cp, cn, b, d, tp, tn);
    for (int k = 1; k <= 1000000; ++k) {
        const double a = 5.0 * k / 1000000.0;
        const double l = csa_round_loss(a, cp, cn, b, d, tp, tn);
        if (l < best_l) {
            best_l = l;
            best_a = a;
        }
    }
    CHECK(std::abs(alpha - best_a) <= 1e-5);
}

TEST_CASE("csa goodness is invariant to rescaling the weights") {
    const double a1 = csa_alpha(3.0, 2.0, 0.05, 0.12, 0.45, 0.55);
    const double a2 = csa_alpha(3.0, 2.0, 0.15, 0.36, 1.35, 1.65);
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-12));
}

TEST_CASE("adaboost_db with unit costs reduces to adaboost") {
    const Dataset ds = overlapping_blobs(47, 13, 17);  // unbalanced on purpose
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 10, 1.0, 1.0), ds, pool);
    auto db =
        train_adaboost_db(make_config(Algorithm::AdaBoostDb, 10, 1.0, 1.0), ds, pool);
    const auto cmp = compare_runs(base, db, 1e-10, 1e-9);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}

TEST_CASE("hyperbolic and polynomial routes agree on selections and goodness") {
    const Dataset ds = overlapping_blobs(53, 10, 10);
    const StumpPool pool = build_pool(ds);
    auto csa =
        train_cs_adaboost(make_config(Algorithm::CsAdaBoost, 10, 2.0, 1.0), ds, pool);
    auto db =
        train_adaboost_db(make_config(Algorithm::AdaBoostDb, 10, 2.0, 1.0), ds, pool);
    REQUIRE(csa.trace.size() == db.trace.size());
    for (std::size_t t = 0; t < csa.trace.size(); ++t) {
        CHECK(csa.ensemble.members[t].second == db.ensemble.members[t].second);
        CHECK(std::abs(csa.ensemble.members[t].first - db.ensemble.members[t].first) <=
              1e-6);
    }
}

TEST_CASE("adaboost_db selections always satisfy the contribution condition") {
    const Dataset ds = overlapping_blobs(83, 12, 14);
    const StumpPool pool = build_pool(ds);
    auto config = make_config(Algorithm::AdaBoostDb, 10, 2.0, 1.0);
    auto model = train_adaboost_db(config, ds, pool);
    REQUIRE(model.weight_history.size() == model.trace.size());
    for (std::size_t t = 0; t < model.trace.size(); ++t) {
        const auto& g = model.weight_history[t];  // global weights of the round
        const auto& stump = model.ensemble.members[t].second;
        KahanAccumulator pos_mass, neg_mass, pos_err, neg_err;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const bool wrong = stump.predict(ds.features[i]) != ds.labels[i];
            if (i < ds.positives) {
                pos_mass.add(g[i]);
                if (wrong) pos_err.add(g[i]);
            } else {
                neg_mass.add(g[i]);
                if (wrong) neg_err.add(g[i]);
            }
        }
        const double denom = 2.0 * pos_mass.total() + 1.0 * neg_mass.total();
        const double a = 2.0 * pos_mass.total() / denom;
        const double b = 1.0 * neg_mass.total() / denom;
        const double ep = pos_err.total() / pos_mass.total();
        const double en = neg_err.total() / neg_mass.total();
        CHECK(a * ep + b * en < 0.5);
    }
}

TEST_CASE("adaboost_db validates its cost preconditions") {
    const Dataset ds = overlapping_blobs(59, 5, 5);
    const StumpPool pool = build_pool(ds);
    CHECK_THROWS_AS(
        train_adaboost_db(make_config(Algorithm::AdaBoostDb, 2, 1.5, 1.0), ds, pool),
        InputError);
    CHECK_THROWS_AS(
        train_adaboost_db(make_config(Algorithm::AdaBoostDb, 2, 1.0, 2.0), ds, pool),
        InputError);
}

TEST_CASE("cost_generalized with equal costs on balanced data is adaboost") {
    const Dataset ds = overlapping_blobs(61, 15, 15);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 12, 1.0, 1.0), ds, pool);
    auto cga = train_cost_generalized(
        make_config(Algorithm::CostGeneralized, 12, 3.0, 3.0), ds, pool);
    const auto cmp = compare_runs(base, cga, 1e-10, 1e-10);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}

TEST_CASE("cost_generalized is exactly invariant to cost scaling") {
    const Dataset ds = overlapping_blobs(67, 12, 18);
    const StumpPool pool = build_pool(ds);
    auto a = train_cost_generalized(
        make_config(Algorithm::CostGeneralized, 10, 2.0, 1.0), ds, pool);
    auto b = train_cost_generalized(
        make_config(Algorithm::CostGeneralized, 10, 10.0, 5.0), ds, pool);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t t = 0; t < a.trace.size(); ++t) {
        CHECK(a.ensemble.members[t].second == b.ensemble.members[t].second);
        CHECK(a.ensemble.members[t].first == b.ensemble.members[t].first);  // bitwise
    }
}

TEST_CASE("cost scaling leaves the ratio-driven trainers untouched") {
    // holds for the weight-initialization, pre-emphasis and (0,1]-mapped
    // cost-function variants; csb0/1/2 multiply misclassified weights by the
    // raw class cost, so the absolute scale genuinely changes their runs
    const Dataset ds = overlapping_blobs(97, 14, 14);
    const StumpPool pool = build_pool(ds);
    for (Algorithm algo : {Algorithm::CostGeneralized, Algorithm::AsymBoost,
                           Algorithm::AdaCost, Algorithm::AdaC1, Algorithm::AdaC2,
                           Algorithm::AdaC3}) {
        auto a = train(make_config(algo, 15, 2.0, 1.0), ds, pool);
        auto b = train(make_config(algo, 15, 10.0, 5.0), ds, pool);
        REQUIRE(a.trace.size() == b.trace.size());
        INFO("algorithm ", std::string(algorithm_name(algo)));
        for (std::size_t t = 0; t < a.trace.size(); ++t) {
            CHECK(a.ensemble.members[t].second == b.ensemble.members[t].second);
            CHECK(a.ensemble.members[t].first ==
                  doctest::Approx(b.ensemble.members[t].first).epsilon(1e-13));
        }
    }
}

TEST_CASE("misclassified weight rises relative to an equal-cost correct example") {
    const Dataset ds = overlapping_blobs(71, 10, 10);
    const StumpPool pool = build_pool(ds);
    const std::vector<Algorithm> algos = {
        Algorithm::AdaBoost, Algorithm::AsymBoost,     Algorithm::AdaCost,
        Algorithm::Csb0,     Algorithm::Csb1,          Algorithm::Csb2,
        Algorithm::AdaC1,    Algorithm::AdaC2,         Algorithm::AdaC3,
        Algorithm::CsAdaBoost, Algorithm::AdaBoostDb,  Algorithm::CostGeneralized};
    for (Algorithm algo : algos) {
        // both class costs above 1 so csb0's cost-only update moves either class
        auto model = train(make_config(algo, 2, 3.0, 2.0), ds, pool);
        REQUIRE(model.weight_history.size() == 2);
        const auto& stump = model.ensemble.members[0].second;
        // find a same-class (wrong, right) pair under the round-1 stump
        long wrong = -1, right = -1;
        for (std::size_t i = 0; i < ds.positives && (wrong < 0 || right < 0); ++i) {
            if (stump.predict(ds.features[i]) != ds.labels[i])
                wrong = static_cast<long>(i);
            else
                right = static_cast<long>(i);
        }
        if (wrong < 0 || right < 0) {
            wrong = right = -1;
            for (std::size_t i = ds.positives; i < ds.size() && (wrong < 0 || right < 0);
                 ++i) {
                if (stump.predict(ds.features[i]) != ds.labels[i])
                    wrong = static_cast<long>(i);
                else
                    right = static_cast<long>(i);
            }
        }
        REQUIRE(wrong >= 0);
        REQUIRE(right >= 0);
        const double growth_wrong =
            model.weight_history[1][wrong] / model.weight_history[0][wrong];
        const double growth_right =
            model.weight_history[1][right] / model.weight_history[0][right];
        INFO("algorithm ", std::string(algorithm_name(algo)));
        CHECK(growth_wrong > growth_right);
    }
}

TEST_CASE("threshold_tuned trains like adaboost and then moves the threshold") {
    const Dataset ds = overlapping_blobs(73, 15, 15);
    const StumpPool pool = build_pool(ds);
    auto base = train_adaboost(make_config(Algorithm::AdaBoost, 10, 1.0, 1.0), ds, pool);
    auto tuned = train(make_config(Algorithm::ThresholdTuned, 10, 5.0, 1.0), ds, pool);
    REQUIRE(tuned.trace.size() == base.trace.size());
    for (std::size_t t = 0; t < base.trace.size(); ++t)
        CHECK(tuned.ensemble.members[t].second == base.ensemble.members[t].second);
    // heavy positive costs pull the threshold down (or keep it at worst equal)
    CHECK(tuned.ensemble.threshold <= base.ensemble.threshold + 1e-12);
    CHECK(tuned.algorithm == Algorithm::ThresholdTuned);
}

TEST_CASE("train() validates inputs") {
    const Dataset ds = overlapping_blobs(79, 5, 5);
    const StumpPool pool = build_pool(ds);
    auto bad_rounds = make_config(Algorithm::AdaBoost, 0, 1.0, 1.0);
    CHECK_THROWS_AS(train(bad_rounds, ds, pool), InputError);

    auto bad_costs = make_config(Algorithm::CostGeneralized, 2, -1.0, 1.0);
    CHECK_THROWS_AS(train(bad_costs, ds, pool), InputError);

    auto unsupported = make_config(Algorithm::Csb0, 2, 2.0, 1.0);
    unsupported.cost_spec.example_costs.assign(ds.size(), 0.5);
    CHECK_THROWS_AS(train(unsupported, ds, pool), InputError);

    auto bad_adacost = make_config(Algorithm::AdaCost, 2, 1.0, 1.0);
    bad_adacost.cost_spec.example_costs.assign(ds.size(), 1.0);  // must be < 1
    CHECK_THROWS_AS(train(bad_adacost, ds, pool), InputError);
}

TEST_CASE("dataset cost columns feed the example-level algorithms") {
    Dataset ds = overlapping_blobs(89, 6, 6);
    ds.costs.assign(ds.size(), 0.2);
    ds.costs[0] = 0.8;  // one expensive positive
    const StumpPool pool = build_pool(ds);

    auto model = train(make_config(Algorithm::AdaCost, 1, 1.0, 1.0), ds, pool);
    REQUIRE(model.weight_history.size() == 1);
    // pre-emphasis made the expensive example four times heavier
    CHECK(model.weight_history[0][0] ==
          doctest::Approx(4.0 * model.weight_history[0][1]).epsilon(1e-12));

    // a dataset-borne column is ignored by class-level algorithms (sweeps over
    // cost-bearing files keep working), but explicitly configured per-example
    // costs are refused
    CHECK_NOTHROW(train(make_config(Algorithm::Csb1, 1, 2.0, 1.0), ds, pool));
    auto explicit_cfg = make_config(Algorithm::Csb1, 1, 2.0, 1.0);
    explicit_cfg.cost_spec.example_costs = ds.costs;
    CHECK_THROWS_AS(train(explicit_cfg, ds, pool), InputError);
    auto explicit_csa = make_config(Algorithm::CsAdaBoost, 1, 2.0, 1.0);
    explicit_csa.cost_spec.example_costs = ds.costs;
    CHECK_THROWS_AS(train(explicit_csa, ds, pool), InputError);
}

TEST_CASE("algorithm names round-trip") {
    for (Algorithm a : {Algorithm::AdaBoost, Algorithm::ThresholdTuned,
                        Algorithm::AsymBoost, Algorithm::AdaCost, Algorithm::Csb0,
                        Algorithm::Csb1, Algorithm::Csb2, Algorithm::AdaC1,
                        Algorithm::AdaC2, Algorithm::AdaC3, Algorithm::CsAdaBoost,
                        Algorithm::AdaBoostDb, Algorithm::CostGeneralized}) {
        const auto name = algorithm_name(a);
        REQUIRE(algorithm_from_name(name).has_value());
        CHECK(*algorithm_from_name(name) == a);
    }
    CHECK_FALSE(algorithm_from_name("nope").has_value());
}

#include "costboost/boosters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "costboost/numerics.hpp"

namespace costboost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_unit(double x, double clamp) {
    return std::min(std::max(x, clamp), 1.0 - clamp);
}

struct NamedAlgorithm {
    Algorithm algo;
    std::string_view name;
};

constexpr NamedAlgorithm kAlgorithms[] = {
    {Algorithm::AdaBoost, "adaboost"},
    {Algorithm::ThresholdTuned, "threshold_tuned"},
    {Algorithm::AsymBoost, "asymboost"},
    {Algorithm::AdaCost, "adacost"},
    {Algorithm::Csb0, "csb0"},
    {Algorithm::Csb1, "csb1"},
    {Algorithm::Csb2, "csb2"},
    {Algorithm::AdaC1, "adac1"},
    {Algorithm::AdaC2, "adac2"},
    {Algorithm::AdaC3, "adac3"},
    {Algorithm::CsAdaBoost, "cs_adaboost"},
    {Algorithm::AdaBoostDb, "adaboost_db"},
    {Algorithm::CostGeneralized, "cost_generalized"},
};

}  // namespace

std::string_view algorithm_name(Algorithm a) {
    for (const auto& e : kAlgorithms)
        if (e.algo == a) return e.name;
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (const auto& e : kAlgorithms)
        if (e.name == name) return e.algo;
    return std::nullopt;
}

bool algorithm_uses_costs(Algorithm a) {
    return a != Algorithm::AdaBoost;
}

double alpha_from_error(double epsilon, double clamp) {
    const double e = clamp_unit(epsilon, clamp);
    return 0.5 * std::log((1.0 - e) / e);
}

double bayes_threshold(const CostSpec& spec) {
    spec.validate();
    return std::log(spec.c_neg / spec.c_pos);
}

double csa_round_loss(double alpha, double c_pos, double c_neg,
                      double err_pos, double err_neg,
                      double pos_mass, double neg_mass) {
    const double ep = std::exp(c_pos * alpha), em = std::exp(-c_pos * alpha);
    const double fp = std::exp(c_neg * alpha), fm = std::exp(-c_neg * alpha);
    return err_pos * (ep - em) + pos_mass * em + err_neg * (fp - fm) + neg_mass * fm;
}

double csa_alpha(double c_pos, double c_neg, double err_pos, double err_neg,
                 double pos_mass, double neg_mass) {
    auto g = [&](double a) {
        return 2.0 * c_pos * err_pos * std::cosh(c_pos * a) +
               2.0 * c_neg * err_neg * std::cosh(c_neg * a) -
               c_pos * pos_mass * std::exp(-c_pos * a) -
               c_neg * neg_mass * std::exp(-c_neg * a);
    };
    const double g0 = g(0.0);
    if (g0 > 0.0)
        throw NumericsError("goodness equation has no non-negative root", 0.0);
    const double g_hi = g(64.0);
    if (g_hi < 0.0)
        throw NumericsError("goodness equation not bracketed on [0, 64]", 64.0);
    return numerics::bisect(g, numerics::Bracket{0.0, 64.0, g0, g_hi}, 1e-12, 200);
}

// ------------------------------------------------------------
// Shared round bookkeeping
// ------------------------------------------------------------

namespace {

class Recorder {
public:
    Recorder(const Dataset& data, Ensemble& ensemble, const TrainConfig& config,
             std::vector<double> initial)
        : data_(data),
          ensemble_(ensemble),
          config_(config),
          initial_(std::move(initial)),
          score_(data.size(), 0.0),
          vote_(ensemble.voting == Voting::CsbCostVote ? data.size() : 0, 0.0) {}

    const std::vector<double>& initial() const { return initial_; }

    void record(TrainedModel& model, int round, const Stump& stump, double alpha,
                double epsilon, double z, double pos_mass,
                std::span<const double> pre_update_weights) {
        ensemble_.members.emplace_back(alpha, stump);
        const bool csb = ensemble_.voting == Voting::CsbCostVote;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            const int h = stump.predict(data_.features[i]);
            score_[i] += alpha * h;
            if (csb) {
                const double scale =
                    h == +1 ? ensemble_.cost_spec.c_pos : ensemble_.cost_spec.c_neg;
                vote_[i] += alpha * h * scale;
            }
        }
        KahanAccumulator err_acc;
        std::size_t pos_wrong = 0, neg_wrong = 0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            const double s = csb ? vote_[i] : score_[i];
            const int label = s >= 0.0 ? +1 : -1;
            if (label != data_.labels[i]) {
                err_acc.add(initial_[i]);
                if (i < data_.positives)
                    ++pos_wrong;
                else
                    ++neg_wrong;
            }
        }
        bound_ *= z;
        RoundTrace t;
        t.round = round;
        t.epsilon = epsilon;
        t.alpha = alpha;
        t.z = z;
        t.bound = bound_;
        t.train_error = err_acc.total();
        t.pos_error = static_cast<double>(pos_wrong) / static_cast<double>(data_.positives);
        t.neg_error = static_cast<double>(neg_wrong) / static_cast<double>(data_.negatives());
        t.pos_mass = pos_mass;
        model.trace.push_back(t);
        if (config_.record_weights)
            model.weight_history.emplace_back(pre_update_weights.begin(),
                                              pre_update_weights.end());
    }

private:
    const Dataset& data_;
    Ensemble& ensemble_;
    const TrainConfig& config_;
    std::vector<double> initial_;
    std::vector<double> score_;
    std::vector<double> vote_;
    double bound_ = 1.0;
};

std::vector<double> resolve_initial_weights(const TrainConfig& config,
                                            std::size_t n) {
    if (config.initial_weights.empty())
        return std::vector<double>(n, 1.0 / static_cast<double>(n));
    if (config.initial_weights.size() != n)
        throw InputError("initial weight vector size does not match dataset");
    WeightState s{config.initial_weights};
    for (double w : s.weights)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw InputError("initial weights must be non-negative and finite");
    s.normalize();
    return s.weights;
}

void validate_config(const TrainConfig& config, const Dataset& dataset) {
    dataset.validate();
    if (config.rounds < 1) throw InputError("rounds must be >= 1");
    config.cost_spec.validate(dataset.size());
    if (!(config.epsilon_clamp > 0.0) || config.epsilon_clamp >= 0.5)
        throw InputError("epsilon clamp must lie in (0, 0.5)");
}

TrainedModel make_model(const TrainConfig& config, Voting voting) {
    TrainedModel model;
    model.algorithm = config.algorithm;
    model.config = config;
    model.ensemble.voting = voting;
    model.ensemble.cost_spec = config.cost_spec;
    model.ensemble.threshold = 0.0;
    return model;
}

Selection require_selection(std::optional<Selection> sel) {
    if (!sel) throw TrainingError("no weak classifier with a finite loss this round");
    return *sel;
}

// Exponential-update loop shared verbatim by the uniform-start and the
// cost-initialized variants; only the starting distribution differs.
TrainedModel run_exponential_loop(const TrainConfig& config, const Dataset& dataset,
                                  const StumpPool& pool, std::vector<double> weights) {
    TrainedModel model = make_model(config, Voting::WeightedSum);
    model.initial_weights = weights;
    Recorder rec(dataset, model.ensemble, config, weights);
    const std::size_t m = dataset.positives;

    for (int t = 1; t <= config.rounds; ++t) {
        const double pos_mass =
            kahan_sum(std::span<const double>(weights.data(), m));
        const std::vector<double> snapshot =
            config.record_weights ? weights : std::vector<double>{};

        const Selection sel = require_selection(select_min_error(pool, dataset, weights));
        const double alpha = alpha_from_error(sel.loss, config.epsilon_clamp);

        KahanAccumulator z_acc;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            const int h = sel.stump.predict(dataset.features[i]);
            weights[i] *= std::exp(-alpha * dataset.labels[i] * h);
            z_acc.add(weights[i]);
        }
        const double z = z_acc.total();
        for (double& w : weights) w /= z;

        rec.record(model, t, sel.stump, alpha, sel.loss, z, pos_mass, snapshot);
    }
    return model;
}

}  // namespace

// ------------------------------------------------------------
// AdaBoost and the weight-initialization variant
// ------------------------------------------------------------

TrainedModel train_adaboost(const TrainConfig& config, const Dataset& dataset,
                            const StumpPool& pool) {
    validate_config(config, dataset);
    return run_exponential_loop(config, dataset, pool,
                                resolve_initial_weights(config, dataset.size()));
}

TrainedModel train_cost_generalized(const TrainConfig& config, const Dataset& dataset,
                                    const StumpPool& pool) {
    validate_config(config, dataset);
    std::vector<double> init;
    if (!config.initial_weights.empty()) {
        init = resolve_initial_weights(config, dataset.size());
    } else {
        const std::size_t m = dataset.positives;
        const std::size_t k = dataset.negatives();
        // Class-conditional distributions default to uniform, or proportional
        // to per-example costs when those are supplied.
        std::vector<double> d_pos(m, 1.0 / static_cast<double>(m));
        std::vector<double> d_neg(k, 1.0 / static_cast<double>(k));
        if (!config.cost_spec.example_costs.empty()) {
            const auto& c = config.cost_spec.example_costs;
            WeightState p{std::vector<double>(c.begin(), c.begin() + m)};
            WeightState q{std::vector<double>(c.begin() + m, c.end())};
            p.normalize();
            q.normalize();
            d_pos = std::move(p.weights);
            d_neg = std::move(q.weights);
        }
        init = compose_weights(config.cost_spec, d_pos, d_neg).weights;
    }
    return run_exponential_loop(config, dataset, pool, std::move(init));
}

// ------------------------------------------------------------
// AsymBoost
// ------------------------------------------------------------

TrainedModel train_asymboost(const TrainConfig& config, const Dataset& dataset,
                             const StumpPool& pool) {
    validate_config(config, dataset);
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    std::vector<double> weights = resolve_initial_weights(config, n);

    // Per-round emphasis factor (C_P/C_N)^(y/2T); its T-fold product gives
    // positives exactly C_P/C_N times the cumulative factor of negatives.
    const double ratio = config.cost_spec.c_pos / config.cost_spec.c_neg;
    const double f_pos = std::pow(ratio, 1.0 / (2.0 * config.rounds));
    const double f_neg = std::pow(ratio, -1.0 / (2.0 * config.rounds));
    auto factor = [&](std::size_t i) { return i < m ? f_pos : f_neg; };

    TrainedModel model = make_model(config, Voting::WeightedSum);
    {
        KahanAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] *= factor(i);
            acc.add(weights[i]);
        }
        const double s = acc.total();
        for (double& w : weights) w /= s;
    }
    model.initial_weights = weights;
    Recorder rec(dataset, model.ensemble, config, weights);

    for (int t = 1; t <= config.rounds; ++t) {
        const double pos_mass = kahan_sum(std::span<const double>(weights.data(), m));
        const std::vector<double> snapshot =
            config.record_weights ? weights : std::vector<double>{};

        const Selection sel = require_selection(select_min_error(pool, dataset, weights));
        const double alpha = alpha_from_error(sel.loss, config.epsilon_clamp);

        KahanAccumulator z_acc;
        for (std::size_t i = 0; i < n; ++i) {
            const int h = sel.stump.predict(dataset.features[i]);
            weights[i] *= std::exp(-alpha * dataset.labels[i] * h) * factor(i);
            z_acc.add(weights[i]);
        }
        const double z = z_acc.total();
        for (double& w : weights) w /= z;

        rec.record(model, t, sel.stump, alpha, sel.loss, z, pos_mass, snapshot);
    }
    return model;
}

// ------------------------------------------------------------
// AdaCost
// ------------------------------------------------------------

TrainedModel train_adacost(const TrainConfig& config, const Dataset& dataset,
                           const StumpPool& pool) {
    validate_config(config, dataset);
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    const double gamma = config.cost_spec.gamma();

    std::vector<double> cost(n);
    if (!config.cost_spec.example_costs.empty()) {
        cost = config.cost_spec.example_costs;
        for (double c : cost)
            if (!(c > 0.0) || !(c < 1.0))
                throw InputError("adacost per-example costs must lie in (0, 1)");
    } else {
        for (std::size_t i = 0; i < n; ++i) cost[i] = i < m ? gamma : 1.0 - gamma;
    }

    std::vector<double> weights = resolve_initial_weights(config, n);
    {
        KahanAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] *= cost[i];
            acc.add(weights[i]);
        }
        const double s = acc.total();
        for (double& w : weights) w /= s;
    }

    TrainedModel model = make_model(config, Voting::WeightedSum);
    model.initial_weights = weights;
    Recorder rec(dataset, model.ensemble, config, weights);

    for (int t = 1; t <= config.rounds; ++t) {
        const double pos_mass = kahan_sum(std::span<const double>(weights.data(), m));
        const std::vector<double> snapshot =
            config.record_weights ? weights : std::vector<double>{};

        const Selection sel = require_selection(select_min_error(pool, dataset, weights));

        // Cost-adjustment beta: lighter decrease on success, sharper
        // increase on failure, both scaling with the example cost.
        std::vector<int> h(n);
        KahanAccumulator r_acc;
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = sel.stump.predict(dataset.features[i]);
            const double beta =
                h[i] == dataset.labels[i] ? 0.5 * (1.0 - cost[i]) : 0.5 * (1.0 + cost[i]);
            r_acc.add(weights[i] * dataset.labels[i] * h[i] * beta);
        }
        double r = r_acc.total();
        const double lim = 1.0 - config.epsilon_clamp;
        r = std::min(std::max(r, -lim), lim);
        const double alpha = 0.5 * std::log((1.0 + r) / (1.0 - r));

        KahanAccumulator z_acc;
        for (std::size_t i = 0; i < n; ++i) {
            const double beta =
                h[i] == dataset.labels[i] ? 0.5 * (1.0 - cost[i]) : 0.5 * (1.0 + cost[i]);
            weights[i] *= std::exp(-alpha * dataset.labels[i] * h[i] * beta);
            z_acc.add(weights[i]);
        }
        const double z = z_acc.total();
        for (double& w : weights) w /= z;

        rec.record(model, t, sel.stump, alpha, sel.loss, z, pos_mass, snapshot);
    }
    return model;
}

// ------------------------------------------------------------
// CSB0 / CSB1 / CSB2
// ------------------------------------------------------------

TrainedModel train_csb(const TrainConfig& config, const Dataset& dataset,
                       const StumpPool& pool, int variant) {
    validate_config(config, dataset);
    if (variant < 0 || variant > 2) throw InputError("csb variant must be 0, 1 or 2");
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    const double cp = config.cost_spec.c_pos;
    const double cn = config.cost_spec.c_neg;

    std::vector<double> weights;
    if (!config.initial_weights.empty()) {
        weights = resolve_initial_weights(config, n);
    } else {
        const double denom = static_cast<double>(m) * cp + static_cast<double>(n - m) * cn;
        weights.resize(n);
        for (std::size_t i = 0; i < n; ++i) weights[i] = (i < m ? cp : cn) / denom;
    }

    TrainedModel model = make_model(config, Voting::CsbCostVote);
    model.initial_weights = weights;
    Recorder rec(dataset, model.ensemble, config, weights);

    for (int t = 1; t <= config.rounds; ++t) {
        const double pos_mass = kahan_sum(std::span<const double>(weights.data(), m));
        const std::vector<double> snapshot =
            config.record_weights ? weights : std::vector<double>{};

        const Selection sel = require_selection(select_min_error(pool, dataset, weights));
        const double alpha = alpha_from_error(sel.loss, config.epsilon_clamp);

        KahanAccumulator z_acc;
        for (std::size_t i = 0; i < n; ++i) {
            const int h = sel.stump.predict(dataset.features[i]);
            const bool wrong = h != dataset.labels[i];
            double w = weights[i];
            if (variant == 1)
                w *= std::exp(-static_cast<double>(dataset.labels[i]) * h);
            else if (variant == 2)
                w *= std::exp(-alpha * dataset.labels[i] * h);
            if (wrong) w *= i < m ? cp : cn;
            weights[i] = w;
            z_acc.add(w);
        }
        const double z = z_acc.total();
        for (double& w : weights) w /= z;

        rec.record(model, t, sel.stump, alpha, sel.loss, z, pos_mass, snapshot);
    }
    return model;
}

// ------------------------------------------------------------
// AdaC1 / AdaC2 / AdaC3
// ------------------------------------------------------------

TrainedModel train_adac(const TrainConfig& config, const Dataset& dataset,
                        const StumpPool& pool, int variant) {
    validate_config(config, dataset);
    if (variant < 1 || variant > 3) throw InputError("adac variant must be 1, 2 or 3");
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;

    std::vector<double> cost(n);
    if (!config.cost_spec.example_costs.empty()) {
        cost = config.cost_spec.example_costs;
        for (double c : cost)
            if (!(c > 0.0) || !(c <= 1.0))
                throw InputError("adac per-example costs must lie in (0, 1]");
    } else {
        // Class costs mapped into (0, 1] by the larger coefficient; only the
        // ratio matters, which also makes the selected sequence invariant to
        // scaling both costs.
        const double top = std::max(config.cost_spec.c_pos, config.cost_spec.c_neg);
        const double c_pos = config.cost_spec.c_pos / top;
        const double c_neg = config.cost_spec.c_neg / top;
        for (std::size_t i = 0; i < n; ++i) cost[i] = i < m ? c_pos : c_neg;
    }

    std::vector<double> weights = resolve_initial_weights(config, n);
    TrainedModel model = make_model(config, Voting::WeightedSum);
    model.initial_weights = weights;
    Recorder rec(dataset, model.ensemble, config, weights);

    std::vector<double> sel_weights(n);
    for (int t = 1; t <= config.rounds; ++t) {
        const double pos_mass = kahan_sum(std::span<const double>(weights.data(), m));
        const std::vector<double> snapshot =
            config.record_weights ? weights : std::vector<double>{};

        KahanAccumulator w1_acc, w2_acc;
        for (std::size_t i = 0; i < n; ++i) {
            w1_acc.add(cost[i] * weights[i]);
            w2_acc.add(cost[i] * cost[i] * weights[i]);
        }
        const double w1 = w1_acc.total();
        const double w2 = w2_acc.total();

        for (std::size_t i = 0; i < n; ++i)
            sel_weights[i] =
                variant == 3 ? cost[i] * cost[i] * weights[i] : cost[i] * weights[i];
        const Selection sel =
            require_selection(select_min_error(pool, dataset, sel_weights));

        const double scale = variant == 3 ? w2 : w1;
        const double eps = std::min(std::max(sel.loss, config.epsilon_clamp * scale),
                                    (1.0 - config.epsilon_clamp) * scale);
        double alpha = 0.0;
        if (variant == 1)
            alpha = 0.5 * std::log((1.0 + w1 - 2.0 * eps) / (1.0 - w1 + 2.0 * eps));
        else if (variant == 2)
            alpha = 0.5 * std::log((w1 - eps) / eps);
        else
            alpha = 0.5 * std::log((w1 + w2 - 2.0 * eps) / (w1 - w2 + 2.0 * eps));

        KahanAccumulator z_acc;
        for (std::size_t i = 0; i < n; ++i) {
            const int h = sel.stump.predict(dataset.features[i]);
            const double exponent_cost = variant == 2 ? 1.0 : cost[i];
            double w = weights[i] *
                       std::exp(-alpha * exponent_cost * dataset.labels[i] * h);
            if (variant != 1) w *= cost[i];
            weights[i] = w;
            z_acc.add(w);
        }
        const double z = z_acc.total();
        for (double& w : weights) w /= z;

        rec.record(model, t, sel.stump, alpha, sel.loss, z, pos_mass, snapshot);
    }
    return model;
}

// ------------------------------------------------------------
// Cost-Sensitive AdaBoost (hyperbolic goodness equation)
// ------------------------------------------------------------

TrainedModel train_cs_adaboost(const TrainConfig& config, const Dataset& dataset,
                               const StumpPool& pool) {
    validate_config(config, dataset);
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    const double cp = config.cost_spec.c_pos;
    const double cn = config.cost_spec.c_neg;
    const double clamp = config.epsilon_clamp;

    std::vector<double> weights = resolve_initial_weights(config, n);
    TrainedModel model = make_model(config, Voting::WeightedSum);
    model.initial_weights = weights;
    Recorder rec(dataset, model.ensemble, config, weights);

    for (int t = 1; t <= config.rounds; ++t) {
        const double t_pos = kahan_sum(std::span<const double>(weights.data(), m));
        const double t_neg = kahan_sum(std::span<const double>(weights.data() + m, n - m));
        const std::vector<double> snapshot =
            config.record_weights ? weights : std::vector<double>{};

        auto loss_fn = [&](std::size_t, double b_raw, double d_raw) {
            const double b = std::min(std::max(b_raw, clamp * t_pos), (1.0 - clamp) * t_pos);
            const double d = std::min(std::max(d_raw, clamp * t_neg), (1.0 - clamp) * t_neg);
            // No non-negative goodness exists when the cost-weighted error
            // reaches half the cost-weighted mass; such candidates sit out.
            if (2.0 * (cp * b + cn * d) > cp * t_pos + cn * t_neg)
                return CandidateOutcome{kInf, 0.0};
            double alpha = 0.0;
            try {
                alpha = csa_alpha(cp, cn, b, d, t_pos, t_neg);
            } catch (const NumericsError&) {
                return CandidateOutcome{kInf, 0.0};
            }
            return CandidateOutcome{csa_round_loss(alpha, cp, cn, b, d, t_pos, t_neg),
                                    alpha};
        };
        const auto sel_opt = select_best(pool, dataset, weights, loss_fn);
        if (!sel_opt)
            throw TrainingError("no candidate admits a non-negative goodness this round");
        const Selection sel = *sel_opt;
        const double alpha = sel.alpha;

        KahanAccumulator z_acc;
        for (std::size_t i = 0; i < n; ++i) {
            const int h = sel.stump.predict(dataset.features[i]);
            const double c = i < m ? cp : cn;
            weights[i] *= std::exp(-c * alpha * dataset.labels[i] * h);
            z_acc.add(weights[i]);
        }
        const double z = z_acc.total();
        for (double& w : weights) w /= z;

        const double plain_eps = (sel.err_pos + sel.err_neg) / (t_pos + t_neg);
        rec.record(model, t, sel.stump, alpha, plain_eps, z, t_pos, snapshot);
    }
    return model;
}

// ------------------------------------------------------------
// AdaBoostDB (double-base polynomial model)
// ------------------------------------------------------------

TrainedModel train_adaboost_db(const TrainConfig& config, const Dataset& dataset,
                               const StumpPool& pool) {
    validate_config(config, dataset);
    const double cp = config.cost_spec.c_pos;
    const double cn = config.cost_spec.c_neg;
    if (cp != std::floor(cp) || cn != std::floor(cn) || cp < 1.0 || cn < 1.0)
        throw InputError("adaboost_db requires positive integer costs "
                         "(pre-scale rational costs to integers)");
    if (cp < cn)
        throw InputError("adaboost_db requires C_P >= C_N; swap labels for the "
                         "opposite asymmetry");
    const int icp = static_cast<int>(cp);
    const int icn = static_cast<int>(cn);
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    const double clamp = config.epsilon_clamp;

    std::vector<double> init = resolve_initial_weights(config, n);
    TrainedModel model = make_model(config, Voting::WeightedSum);
    model.initial_weights = init;
    Recorder rec(dataset, model.ensemble, config, init);

    // Subdistributions normalized within each class; accumulators carry the
    // running class masses (started at the masses of the initial global
    // distribution so the bound matches it).
    double acc_pos = kahan_sum(std::span<const double>(init.data(), m));
    double acc_neg = kahan_sum(std::span<const double>(init.data() + m, n - m));
    std::vector<double> sub(n);
    for (std::size_t i = 0; i < n; ++i)
        sub[i] = i < m ? init[i] / acc_pos : init[i] / acc_neg;

    std::vector<double> snapshot_buf(n);
    for (int t = 1; t <= config.rounds; ++t) {
        // Fold the pending per-class normalizers into the accumulators.
        const double sum_pos = kahan_sum(std::span<const double>(sub.data(), m));
        const double sum_neg = kahan_sum(std::span<const double>(sub.data() + m, n - m));
        acc_pos *= sum_pos;
        acc_neg *= sum_neg;
        for (std::size_t i = 0; i < n; ++i) sub[i] /= i < m ? sum_pos : sum_neg;

        const double a = cp * acc_pos / (cp * acc_pos + cn * acc_neg);
        const double b = cn * acc_neg / (cp * acc_pos + cn * acc_neg);
        const double share_pos = acc_pos / (acc_pos + acc_neg);
        const double share_neg = acc_neg / (acc_pos + acc_neg);

        if (config.record_weights) {
            for (std::size_t i = 0; i < n; ++i)
                snapshot_buf[i] = (i < m ? share_pos : share_neg) * sub[i];
        }

        auto loss_fn = [&](std::size_t, double ep_raw, double en_raw) {
            const double ep = clamp_unit(ep_raw, clamp);
            const double en = clamp_unit(en_raw, clamp);
            if (a * ep + b * en >= 0.5)  // contribution condition
                return CandidateOutcome{kInf, 0.0};
            std::map<int, double> poly;
            poly[2 * icp] += a * ep;
            poly[icp + icn] += b * en;
            poly[icp - icn] += b * (en - 1.0);
            poly[0] += a * (ep - 1.0);
            double root = 0.0;
            try {
                root = numerics::positive_poly_root(poly);
            } catch (const NumericsError&) {
                return CandidateOutcome{kInf, 0.0};
            }
            // Candidate comparison by the accumulator-weighted bound value at
            // the root; the printed update of the "minimum root vector"
            // duplicates a term, so the comparison is taken from the loss it
            // encodes.
            const double rp = numerics::ipow(root, icp);
            const double rn = numerics::ipow(root, icn);
            const double loss = share_pos * (ep * rp + (1.0 - ep) / rp) +
                                share_neg * (en * rn + (1.0 - en) / rn);
            return CandidateOutcome{loss, std::log(root)};
        };
        const auto sel_opt = select_best(pool, dataset, sub, loss_fn);
        if (!sel_opt) break;  // no admissible candidate: stop with the partial model
        const Selection sel = *sel_opt;
        const double alpha = sel.alpha;

        for (std::size_t i = 0; i < n; ++i) {
            const int h = sel.stump.predict(dataset.features[i]);
            sub[i] *= i < m ? std::exp(-cp * alpha * h) : std::exp(cn * alpha * h);
        }

        const double z_pos = kahan_sum(std::span<const double>(sub.data(), m));
        const double z_neg = kahan_sum(std::span<const double>(sub.data() + m, n - m));
        const double z = (acc_pos * z_pos + acc_neg * z_neg) / (acc_pos + acc_neg);
        const double plain_eps = share_pos * sel.err_pos + share_neg * sel.err_neg;
        rec.record(model, t, sel.stump, alpha, plain_eps, z, share_pos, snapshot_buf);
    }
    return model;
}

// ------------------------------------------------------------
// Threshold tuning
// ------------------------------------------------------------

Ensemble tune_threshold(const TrainedModel& model, const Dataset& validation,
                        const CostSpec& spec) {
    if (model.ensemble.voting != Voting::WeightedSum)
        throw InputError("threshold tuning needs a weighted-sum ensemble");
    if (model.ensemble.members.empty())
        throw InputError("cannot tune an empty ensemble");
    spec.validate();
    validation.validate();

    const std::size_t n = validation.size();
    const std::size_t m = validation.positives;
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i)
        scores[i] = model.ensemble.score(validation.features[i]);

    std::vector<double> sorted(scores);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<double> candidates;
    candidates.push_back(sorted.front() - 1.0);
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k)
        candidates.push_back(sorted[k] + 0.5 * (sorted[k + 1] - sorted[k]));
    candidates.push_back(sorted.back() + 1.0);

    auto cost_at = [&](double phi) {
        std::size_t fn = 0, fp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int label = scores[i] - phi >= 0.0 ? +1 : -1;
            if (label != validation.labels[i]) {
                if (i < m)
                    ++fn;
                else
                    ++fp;
            }
        }
        return spec.c_pos * static_cast<double>(fn) / static_cast<double>(m) +
               spec.c_neg * static_cast<double>(fp) / static_cast<double>(n - m);
    };

    double best_phi = candidates.front();
    double best_cost = cost_at(best_phi);
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        const double phi = candidates[k];
        const double c = cost_at(phi);
        if (c < best_cost ||
            (c == best_cost && (std::abs(phi) < std::abs(best_phi) ||
                                (std::abs(phi) == std::abs(best_phi) && phi < best_phi)))) {
            best_cost = c;
            best_phi = phi;
        }
    }

    Ensemble tuned = model.ensemble;
    tuned.threshold = best_phi;
    return tuned;
}

// ------------------------------------------------------------
// Dispatcher
// ------------------------------------------------------------

TrainedModel train(const TrainConfig& config, const Dataset& dataset,
                   const StumpPool& pool, const Dataset* validation) {
    TrainConfig cfg = config;
    const bool wants_example_costs =
        cfg.algorithm == Algorithm::AdaCost || cfg.algorithm == Algorithm::AdaC1 ||
        cfg.algorithm == Algorithm::AdaC2 || cfg.algorithm == Algorithm::AdaC3 ||
        cfg.algorithm == Algorithm::CostGeneralized;
    if (!cfg.cost_spec.example_costs.empty() && !wants_example_costs)
        throw InputError(std::string("per-example costs are not supported by ") +
                         std::string(algorithm_name(cfg.algorithm)));
    if (cfg.cost_spec.example_costs.empty() && wants_example_costs &&
        !dataset.costs.empty())
        cfg.cost_spec.example_costs = dataset.costs;

    switch (cfg.algorithm) {
        case Algorithm::AdaBoost:
            return train_adaboost(cfg, dataset, pool);
        case Algorithm::ThresholdTuned: {
            TrainedModel model = train_adaboost(cfg, dataset, pool);
            model.algorithm = Algorithm::ThresholdTuned;
            model.config.algorithm = Algorithm::ThresholdTuned;
            model.ensemble =
                tune_threshold(model, validation ? *validation : dataset, cfg.cost_spec);
            return model;
        }
        case Algorithm::AsymBoost:
            return train_asymboost(cfg, dataset, pool);
        case Algorithm::AdaCost:
            return train_adacost(cfg, dataset, pool);
        case Algorithm::Csb0:
            return train_csb(cfg, dataset, pool, 0);
        case Algorithm::Csb1:
            return train_csb(cfg, dataset, pool, 1);
        case Algorithm::Csb2:
            return train_csb(cfg, dataset, pool, 2);
        case Algorithm::AdaC1:
            return train_adac(cfg, dataset, pool, 1);
        case Algorithm::AdaC2:
            return train_adac(cfg, dataset, pool, 2);
        case Algorithm::AdaC3:
            return train_adac(cfg, dataset, pool, 3);
        case Algorithm::CsAdaBoost:
            return train_cs_adaboost(cfg, dataset, pool);
        case Algorithm::AdaBoostDb:
            return train_adaboost_db(cfg, dataset, pool);
        case Algorithm::CostGeneralized:
            return train_cost_generalized(cfg, dataset, pool);
    }
    throw InputError("unknown algorithm");
}

}  // namespace costboost

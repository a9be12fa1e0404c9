#ifndef COSTBOOST_BOOSTERS_HPP
#define COSTBOOST_BOOSTERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "costboost/core.hpp"
#include "costboost/weaklearn.hpp"

namespace costboost {

enum class Algorithm {
    AdaBoost,
    ThresholdTuned,
    AsymBoost,
    AdaCost,
    Csb0,
    Csb1,
    Csb2,
    AdaC1,
    AdaC2,
    AdaC3,
    CsAdaBoost,
    AdaBoostDb,
    CostGeneralized,
};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);
bool algorithm_uses_costs(Algorithm a);

struct TrainConfig {
    Algorithm algorithm = Algorithm::AdaBoost;
    int rounds = 1;
    CostSpec cost_spec;
    std::vector<double> initial_weights;  // optional; empty = per-algorithm default
    double epsilon_clamp = 1e-12;
    std::uint64_t seed = 0;
    bool record_weights = false;  // keep per-round weight snapshots (diagnostics)
};

struct TrainedModel {
    Ensemble ensemble;
    std::vector<RoundTrace> trace;
    Algorithm algorithm = Algorithm::AdaBoost;
    TrainConfig config;
    std::vector<double> initial_weights;  // resolved D1 used by the run
    std::vector<std::vector<double>> weight_history;  // pre-update, per round
};

// Goodness of a binary weak classifier from its weighted error, with the
// error clamped into [clamp, 1-clamp] so separable rounds stay finite.
double alpha_from_error(double epsilon, double clamp = 1e-12);

// Decision threshold on the cost-insensitive optimal predictor: log(C_N/C_P).
double bayes_threshold(const CostSpec& spec);

// The per-candidate goodness equation of the hyperbolic variant:
//   2 C_P B cosh(C_P a) + 2 C_N D cosh(C_N a) = C_P T_P e^(-C_P a) + C_N T_N e^(-C_N a)
// solved by bisection on [0, 64] to 1e-12 (B = misclassified positive mass,
// D = misclassified negative mass, T_P/T_N = class masses). Throws
// NumericsError when no root exists on the bracket.
double csa_alpha(double c_pos, double c_neg, double err_pos, double err_neg,
                 double pos_mass, double neg_mass);

// The round loss whose stationary point the equation above encodes.
double csa_round_loss(double alpha, double c_pos, double c_neg,
                      double err_pos, double err_neg,
                      double pos_mass, double neg_mass);

TrainedModel train(const TrainConfig& config, const Dataset& dataset,
                   const StumpPool& pool, const Dataset* validation = nullptr);

TrainedModel train_adaboost(const TrainConfig&, const Dataset&, const StumpPool&);
TrainedModel train_asymboost(const TrainConfig&, const Dataset&, const StumpPool&);
TrainedModel train_adacost(const TrainConfig&, const Dataset&, const StumpPool&);
TrainedModel train_csb(const TrainConfig&, const Dataset&, const StumpPool&, int variant);
TrainedModel train_adac(const TrainConfig&, const Dataset&, const StumpPool&, int variant);
TrainedModel train_cs_adaboost(const TrainConfig&, const Dataset&, const StumpPool&);
TrainedModel train_adaboost_db(const TrainConfig&, const Dataset&, const StumpPool&);
TrainedModel train_cost_generalized(const TrainConfig&, const Dataset&, const StumpPool&);

// A-posteriori threshold selection on a validation set: minimizes
// C_P*FN(phi)/m + C_N*FP(phi)/(n-m) over midpoints of consecutive sorted
// validation scores plus below-min/above-max sentinels; ties prefer the
// smallest |phi|, then the smaller phi.
Ensemble tune_threshold(const TrainedModel& model, const Dataset& validation,
                        const CostSpec& spec);

}  // namespace costboost

#endif  // COSTBOOST_BOOSTERS_HPP

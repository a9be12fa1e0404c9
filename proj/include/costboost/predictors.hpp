#ifndef COSTBOOST_PREDICTORS_HPP
#define COSTBOOST_PREDICTORS_HPP

#include <span>

#include "costboost/core.hpp"

namespace costboost {

enum class PredictorVariant { Ab, Cga, Csa };

// Minimizers of the pointwise exponential risks, p = P(y=1|x) interior.
double f_ab(double p);
double f_cga(double p, const CostSpec& spec);
double f_csa(double p, const CostSpec& spec);

// Pointwise conditional risk of predictor value f:
//   ab:  p e^-f + (1-p) e^f
//   cga: p C_P e^-f + (1-p) C_N e^f
//   csa: p e^(-C_P f) + (1-p) e^(C_N f)
double risk(double f, double p, const CostSpec& spec, PredictorVariant variant);

struct RiskPoint {
    double p;
    double gamma;
    double f;
};

// Cost pair for a normalized asymmetry with one coefficient pinned to 1 and
// the other >= 1 (the colormap convention).
CostSpec cost_from_gamma(double gamma);

// Optimal-predictor values over the (p, gamma) grid, p-major. Grid values
// are clamped into [1e-9, 1-1e-9] to keep the logits finite.
std::vector<RiskPoint> isoline_grid(PredictorVariant variant,
                                    std::span<const double> gammas,
                                    std::span<const double> ps);

// First (p, gamma_lo, gamma_hi) witness with f(p, gamma_lo) > f(p, gamma_hi) > 0
// found on the grid, if any; the csa map has such crossings.
struct MonotonicityWitness {
    double p;
    double gamma_lo;
    double gamma_hi;
    double f_lo;
    double f_hi;
};

std::vector<MonotonicityWitness> find_gamma_inversions(
    PredictorVariant variant, std::span<const double> gammas, std::span<const double> ps);

}  // namespace costboost

#endif  // COSTBOOST_PREDICTORS_HPP

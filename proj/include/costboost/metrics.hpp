#ifndef COSTBOOST_METRICS_HPP
#define COSTBOOST_METRICS_HPP

#include "costboost/boosters.hpp"
#include "costboost/core.hpp"

namespace costboost {

// Class-conditional error rates with uniform within-class mass, their
// cost-weighted combination, and the plain unweighted error.
struct CostErrorReport {
    double err_pos = 0.0;  // fraction of positives misclassified
    double err_neg = 0.0;
    double global = 0.0;   // gamma*err_pos + (1-gamma)*err_neg
    double raw = 0.0;      // unweighted error
};

CostErrorReport cost_error(const Ensemble& ensemble, const Dataset& dataset,
                           const CostSpec& spec);

enum class BoundVariant { Symmetric, Cga, Csa };

// Exponential bound of the partial predictors f_t, one value per prefix
// t = 0..T, weighted by the model's initial distribution. Symmetric and Cga
// use exp(-y f); Csa puts the class costs in the exponents.
std::vector<double> exp_bound_trace(const TrainedModel& model, const Dataset& dataset,
                                    BoundVariant variant);

// The matching error sequence: initial-distribution-weighted error of the
// sign detector of each partial predictor (threshold 0), t = 0..T.
std::vector<double> initial_weighted_error_trace(const TrainedModel& model,
                                                 const Dataset& dataset);

// Ratio of the positive-class loss to the negative-class loss at a common
// performance score: constant C_P/C_N for Cga, exp((C_N-C_P)*score) for Csa.
double prevalence_ratio(double score, const CostSpec& spec, BoundVariant variant);

// Per-round positive weight mass (pre-update), straight from the trace.
std::vector<double> weight_asymmetry_trace(const TrainedModel& model);

}  // namespace costboost

#endif  // COSTBOOST_METRICS_HPP

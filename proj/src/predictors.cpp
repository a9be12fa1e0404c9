#include "costboost/predictors.hpp"

#include <algorithm>
#include <cmath>

namespace costboost {

namespace {

void check_interior(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw InputError("likelihood p must lie strictly inside (0, 1)");
}

}  // namespace

double f_ab(double p) {
    check_interior(p);
    return 0.5 * std::log(p / (1.0 - p));
}

double f_cga(double p, const CostSpec& spec) {
    check_interior(p);
    spec.validate();
    return 0.5 * std::log(spec.c_pos * p / (spec.c_neg * (1.0 - p)));
}

double f_csa(double p, const CostSpec& spec) {
    check_interior(p);
    spec.validate();
    return std::log(spec.c_pos * p / (spec.c_neg * (1.0 - p))) /
           (spec.c_pos + spec.c_neg);
}

double risk(double f, double p, const CostSpec& spec, PredictorVariant variant) {
    switch (variant) {
        case PredictorVariant::Ab:
            return p * std::exp(-f) + (1.0 - p) * std::exp(f);
        case PredictorVariant::Cga:
            return p * spec.c_pos * std::exp(-f) + (1.0 - p) * spec.c_neg * std::exp(f);
        case PredictorVariant::Csa:
            return p * std::exp(-spec.c_pos * f) + (1.0 - p) * std::exp(spec.c_neg * f);
    }
    throw InputError("unknown predictor variant");
}

CostSpec cost_from_gamma(double gamma) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw InputError("gamma must lie strictly inside (0, 1)");
    CostSpec spec;
    if (gamma >= 0.5) {
        spec.c_pos = gamma / (1.0 - gamma);
        spec.c_neg = 1.0;
    } else {
        spec.c_pos = 1.0;
        spec.c_neg = (1.0 - gamma) / gamma;
    }
    return spec;
}

namespace {

double grid_value(PredictorVariant variant, double p, double gamma) {
    const double pc = std::clamp(p, 1e-9, 1.0 - 1e-9);
    const CostSpec spec = cost_from_gamma(std::clamp(gamma, 1e-9, 1.0 - 1e-9));
    switch (variant) {
        case PredictorVariant::Ab:
            return f_ab(pc);
        case PredictorVariant::Cga:
            return f_cga(pc, spec);
        case PredictorVariant::Csa:
            return f_csa(pc, spec);
    }
    throw InputError("unknown predictor variant");
}

}  // namespace

std::vector<RiskPoint> isoline_grid(PredictorVariant variant,
                                    std::span<const double> gammas,
                                    std::span<const double> ps) {
    if (gammas.empty() || ps.empty())
        throw InputError("isoline grid needs non-empty gamma and p grids");
    std::vector<RiskPoint> out;
    out.reserve(gammas.size() * ps.size());
    for (double p : ps)
        for (double g : gammas)
            out.push_back(RiskPoint{p, g, grid_value(variant, p, g)});
    return out;
}

std::vector<MonotonicityWitness> find_gamma_inversions(
    PredictorVariant variant, std::span<const double> gammas,
    std::span<const double> ps) {
    std::vector<MonotonicityWitness> out;
    for (double p : ps) {
        for (std::size_t a = 0; a < gammas.size(); ++a) {
            for (std::size_t b = a + 1; b < gammas.size(); ++b) {
                if (!(gammas[a] < gammas[b])) continue;
                const double fa = grid_value(variant, p, gammas[a]);
                const double fb = grid_value(variant, p, gammas[b]);
                if (fa > fb && fb > 0.0)
                    out.push_back(MonotonicityWitness{p, gammas[a], gammas[b], fa, fb});
            }
        }
    }
    return out;
}

}  // namespace costboost

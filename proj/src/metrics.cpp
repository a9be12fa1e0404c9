#include "costboost/metrics.hpp"

#include <cmath>

namespace costboost {

CostErrorReport cost_error(const Ensemble& ensemble, const Dataset& dataset,
                           const CostSpec& spec) {
    dataset.validate();
    spec.validate();
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    std::size_t pos_wrong = 0, neg_wrong = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (ensemble.classify(dataset.features[i]) != dataset.labels[i]) {
            if (i < m)
                ++pos_wrong;
            else
                ++neg_wrong;
        }
    }
    CostErrorReport r;
    r.err_pos = static_cast<double>(pos_wrong) / static_cast<double>(m);
    r.err_neg = static_cast<double>(neg_wrong) / static_cast<double>(n - m);
    const double gamma = spec.gamma();
    r.global = gamma * r.err_pos + (1.0 - gamma) * r.err_neg;
    r.raw = static_cast<double>(pos_wrong + neg_wrong) / static_cast<double>(n);
    return r;
}

namespace {

std::vector<double> resolved_initial(const TrainedModel& model, std::size_t n) {
    if (model.initial_weights.size() == n) return model.initial_weights;
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

}  // namespace

std::vector<double> exp_bound_trace(const TrainedModel& model, const Dataset& dataset,
                                    BoundVariant variant) {
    const std::size_t n = dataset.size();
    const std::size_t m = dataset.positives;
    const std::vector<double> d1 = resolved_initial(model, n);
    const double cp = variant == BoundVariant::Csa ? model.config.cost_spec.c_pos : 1.0;
    const double cn = variant == BoundVariant::Csa ? model.config.cost_spec.c_neg : 1.0;

    std::vector<double> score(n, 0.0);
    std::vector<double> out;
    out.reserve(model.ensemble.members.size() + 1);
    for (std::size_t t = 0; t <= model.ensemble.members.size(); ++t) {
        if (t > 0) {
            const auto& [alpha, stump] = model.ensemble.members[t - 1];
            for (std::size_t i = 0; i < n; ++i)
                score[i] += alpha * stump.predict(dataset.features[i]);
        }
        KahanAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = i < m ? cp : cn;
            acc.add(d1[i] * std::exp(-c * dataset.labels[i] * score[i]));
        }
        out.push_back(acc.total());
    }
    return out;
}

std::vector<double> initial_weighted_error_trace(const TrainedModel& model,
                                                 const Dataset& dataset) {
    const std::size_t n = dataset.size();
    const std::vector<double> d1 = resolved_initial(model, n);

    std::vector<double> score(n, 0.0);
    std::vector<double> out;
    out.reserve(model.ensemble.members.size() + 1);
    for (std::size_t t = 0; t <= model.ensemble.members.size(); ++t) {
        if (t > 0) {
            const auto& [alpha, stump] = model.ensemble.members[t - 1];
            for (std::size_t i = 0; i < n; ++i)
                score[i] += alpha * stump.predict(dataset.features[i]);
        }
        KahanAccumulator acc;
        for (std::size_t i = 0; i < n; ++i) {
            const int label = score[i] >= 0.0 ? +1 : -1;
            if (label != dataset.labels[i]) acc.add(d1[i]);
        }
        out.push_back(acc.total());
    }
    return out;
}

double prevalence_ratio(double score, const CostSpec& spec, BoundVariant variant) {
    spec.validate();
    if (variant == BoundVariant::Cga) return spec.c_pos / spec.c_neg;
    if (variant == BoundVariant::Csa)
        return std::exp((spec.c_neg - spec.c_pos) * score);
    throw InputError("prevalence ratio is defined for the cga and csa bounds");
}

std::vector<double> weight_asymmetry_trace(const TrainedModel& model) {
    std::vector<double> out;
    out.reserve(model.trace.size());
    for (const auto& t : model.trace) out.push_back(t.pos_mass);
    return out;
}

}  // namespace costboost

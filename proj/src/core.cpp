#include "costboost/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace costboost {

double kahan_sum(std::span<const double> values) {
    KahanAccumulator acc;
    for (double v : values) acc.add(v);
    return acc.total();
}

void CostSpec::validate(std::size_t n_examples) const {
    if (!(c_pos > 0.0) || !std::isfinite(c_pos) || !(c_neg > 0.0) || !std::isfinite(c_neg))
        throw InputError("cost spec requires finite positive c_pos and c_neg");
    if (!example_costs.empty()) {
        if (n_examples != 0 && example_costs.size() != n_examples)
            throw InputError("per-example cost vector size does not match dataset size");
        for (double c : example_costs)
            if (!(c > 0.0) || !std::isfinite(c))
                throw InputError("per-example costs must be finite and positive");
    }
}

Dataset Dataset::make(std::vector<std::vector<double>> features,
                      std::vector<int> labels,
                      std::vector<double> costs) {
    if (features.size() != labels.size())
        throw InputError("feature and label counts differ");
    if (!costs.empty() && costs.size() != labels.size())
        throw InputError("cost column size does not match example count");

    const std::size_t n = features.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return labels[a] > labels[b]; });

    Dataset out;
    out.features.reserve(n);
    out.labels.reserve(n);
    out.source_rows.reserve(n);
    for (std::size_t i : perm) {
        out.features.push_back(std::move(features[i]));
        out.labels.push_back(labels[i]);
        out.source_rows.push_back(i);
        if (!costs.empty()) out.costs.push_back(costs[i]);
    }
    out.positives = static_cast<std::size_t>(
        std::count(out.labels.begin(), out.labels.end(), +1));
    out.validate();
    return out;
}

void Dataset::validate() const {
    const std::size_t n = size();
    if (n < 2) throw InputError("dataset needs at least two examples");
    if (positives < 1 || positives >= n)
        throw InputError("dataset needs at least one example of each class");
    const std::size_t d = dim();
    if (d == 0) throw InputError("dataset needs at least one feature");
    for (std::size_t i = 0; i < n; ++i) {
        if (features[i].size() != d)
            throw InputError("ragged feature matrix at example " + std::to_string(i));
        for (double v : features[i])
            if (!std::isfinite(v))
                throw InputError("non-finite feature value at example " + std::to_string(i));
        const int expected = i < positives ? +1 : -1;
        if (labels[i] != expected)
            throw InputError("labels are not in positives-first order");
    }
    if (!costs.empty()) {
        if (costs.size() != n) throw InputError("cost vector size mismatch");
        for (double c : costs)
            if (!(c > 0.0) || !std::isfinite(c))
                throw InputError("per-example costs must be finite and positive");
    }
}

Dataset Dataset::with_swapped_labels() const {
    std::vector<int> flipped(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) flipped[i] = -labels[i];
    Dataset out = Dataset::make(features, std::move(flipped), costs);
    return out;
}

double WeightState::positive_mass(std::size_t m) const {
    return kahan_sum(std::span<const double>(weights.data(), m));
}

void WeightState::normalize() {
    const double total = kahan_sum(weights);
    if (!(total > 0.0) || !std::isfinite(total))
        throw InputError("cannot normalize weight state with non-positive mass");
    for (double& w : weights) w /= total;
}

WeightState WeightState::uniform(std::size_t n) {
    WeightState s;
    s.weights.assign(n, 1.0 / static_cast<double>(n));
    return s;
}

Decomposition decompose_asymmetry(const WeightState& state, std::size_t m) {
    const auto& w = state.weights;
    if (m == 0 || m >= w.size())
        throw InputError("decompose_asymmetry needs both classes present");
    const double gamma = kahan_sum(std::span<const double>(w.data(), m));
    const double neg_mass = kahan_sum(std::span<const double>(w.data() + m, w.size() - m));
    if (!(gamma > 0.0) || !(neg_mass > 0.0))
        throw InputError("degenerate distribution: a class carries zero mass");

    Decomposition out;
    out.gamma = gamma;
    out.d_pos.reserve(m);
    out.d_neg.reserve(w.size() - m);
    for (std::size_t i = 0; i < m; ++i) out.d_pos.push_back(w[i] / gamma);
    for (std::size_t i = m; i < w.size(); ++i) out.d_neg.push_back(w[i] / neg_mass);
    return out;
}

WeightState compose_weights(const CostSpec& spec,
                            std::span<const double> d_pos,
                            std::span<const double> d_neg) {
    spec.validate();
    if (d_pos.empty() || d_neg.empty())
        throw InputError("compose_weights needs both class distributions");
    const double sp = kahan_sum(d_pos);
    const double sn = kahan_sum(d_neg);
    if (std::abs(sp - 1.0) > 1e-9 || std::abs(sn - 1.0) > 1e-9)
        throw InputError("class distributions must each sum to 1 within 1e-9");

    const double gamma = spec.gamma();
    WeightState out;
    out.weights.reserve(d_pos.size() + d_neg.size());
    for (double v : d_pos) out.weights.push_back(gamma * v);
    for (double v : d_neg) out.weights.push_back((1.0 - gamma) * v);
    return out;
}

double Ensemble::score(std::span<const double> x) const {
    KahanAccumulator acc;
    if (voting == Voting::WeightedSum) {
        for (const auto& [alpha, stump] : members)
            acc.add(alpha * stump.predict(x));
    } else {
        // Minimum expected cost vote: each weak vote is scaled by the cost
        // of the class it decides for.
        for (const auto& [alpha, stump] : members) {
            const int h = stump.predict(x);
            const double scale = h == +1 ? cost_spec.c_pos : cost_spec.c_neg;
            acc.add(alpha * h * scale);
        }
    }
    return acc.total();
}

Prediction predict(const Ensemble& ensemble, std::span<const double> x) {
    if (ensemble.members.empty())
        throw InputError("cannot predict with an empty ensemble");
    for (const auto& [alpha, stump] : ensemble.members) {
        if (stump.kind == Stump::Kind::Threshold &&
            (stump.feature < 0 || static_cast<std::size_t>(stump.feature) >= x.size()))
            throw InputError("input dimension does not match ensemble stumps");
    }
    const double s = ensemble.score(x);
    return Prediction{s - ensemble.threshold >= 0.0 ? +1 : -1, s};
}

}  // namespace costboost

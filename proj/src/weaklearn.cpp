#include "costboost/weaklearn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace costboost {

StumpPool build_pool(const Dataset& dataset) {
    dataset.validate();
    const std::size_t n = dataset.size();
    const std::size_t d = dataset.dim();

    StumpPool pool;
    pool.n = n;
    pool.d = d;
    pool.features.resize(d);

    for (std::size_t j = 0; j < d; ++j) {
        auto& fi = pool.features[j];
        fi.order.resize(n);
        std::iota(fi.order.begin(), fi.order.end(), std::size_t{0});
        std::stable_sort(fi.order.begin(), fi.order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return dataset.features[a][j] < dataset.features[b][j];
                         });
        for (std::size_t k = 1; k <= n; ++k) {
            if (k == n || dataset.features[fi.order[k]][j] !=
                              dataset.features[fi.order[k - 1]][j])
                fi.group_end.push_back(k);
        }
        fi.first_candidate = pool.candidates.size();

        const std::size_t groups = fi.group_end.size();
        for (std::size_t g = 0; g + 1 < groups; ++g) {
            const double lo = dataset.features[fi.order[fi.group_end[g] - 1]][j];
            const double hi = dataset.features[fi.order[fi.group_end[g]]][j];
            const double mid = lo + 0.5 * (hi - lo);
            for (int pol : {+1, -1}) {
                Stump s;
                s.kind = Stump::Kind::Threshold;
                s.feature = static_cast<int>(j);
                s.threshold = mid;
                s.polarity = pol;
                pool.candidates.push_back(s);
            }
        }
    }
    for (int sign : {+1, -1}) {
        Stump s;
        s.kind = Stump::Kind::Constant;
        s.constant_sign = sign;
        pool.candidates.push_back(s);
    }
    return pool;
}

double weighted_error(const Stump& stump, const Dataset& dataset,
                      std::span<const double> weights) {
    KahanAccumulator acc;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (stump.predict(dataset.features[i]) != dataset.labels[i])
            acc.add(weights[i]);
    }
    return acc.total();
}

std::vector<ClassErrors> scan_class_errors(const StumpPool& pool,
                                           const Dataset& dataset,
                                           std::span<const double> weights) {
    const std::size_t m = dataset.positives;
    KahanAccumulator pos_total_acc, neg_total_acc;
    for (std::size_t i = 0; i < m; ++i) pos_total_acc.add(weights[i]);
    for (std::size_t i = m; i < dataset.size(); ++i) neg_total_acc.add(weights[i]);
    const double pos_total = pos_total_acc.total();
    const double neg_total = neg_total_acc.total();

    std::vector<ClassErrors> out(pool.size());
    for (std::size_t j = 0; j < pool.d; ++j) {
        const auto& fi = pool.features[j];
        KahanAccumulator pos_below, neg_below;
        std::size_t cand = fi.first_candidate;
        std::size_t k = 0;
        const std::size_t groups = fi.group_end.size();
        for (std::size_t g = 0; g + 1 < groups; ++g) {
            for (; k < fi.group_end[g]; ++k) {
                const std::size_t idx = fi.order[k];
                if (idx < m)
                    pos_below.add(weights[idx]);
                else
                    neg_below.add(weights[idx]);
            }
            const double pb = pos_below.total();
            const double nb = neg_below.total();
            // polarity +1 predicts +1 at or above the midpoint
            out[cand++] = ClassErrors{pb, neg_total - nb};
            // polarity -1 predicts +1 strictly below it
            out[cand++] = ClassErrors{pos_total - pb, nb};
        }
    }
    // constants: all-positives then all-negatives
    out[pool.size() - 2] = ClassErrors{0.0, neg_total};
    out[pool.size() - 1] = ClassErrors{pos_total, 0.0};
    return out;
}

std::optional<Selection> select_best(const StumpPool& pool,
                                     const Dataset& dataset,
                                     std::span<const double> weights,
                                     const LossFn& loss) {
    if (pool.size() == 0) throw InputError("empty stump pool");
    const auto errors = scan_class_errors(pool, dataset, weights);

    std::optional<Selection> best;
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
        const CandidateOutcome outcome = loss(idx, errors[idx].err_pos, errors[idx].err_neg);
        if (!std::isfinite(outcome.loss)) continue;
        if (!best || outcome.loss < best->loss - kSelectionTieBand) {
            best = Selection{pool.candidates[idx], idx, outcome.loss, outcome.alpha,
                             errors[idx].err_pos, errors[idx].err_neg};
        }
    }
    return best;
}

std::optional<Selection> select_min_error(const StumpPool& pool,
                                          const Dataset& dataset,
                                          std::span<const double> weights) {
    return select_best(pool, dataset, weights,
                       [](std::size_t, double ep, double en) {
                           return CandidateOutcome{ep + en, 0.0};
                       });
}

}  // namespace costboost

#ifndef COSTBOOST_WEAKLEARN_HPP
#define COSTBOOST_WEAKLEARN_HPP

#include <functional>
#include <optional>

#include "costboost/core.hpp"

namespace costboost {

// Candidate losses closer than this are treated as ties and resolved by the
// lowest enumeration index. Absorbs summation-order noise so that selections
// stay reproducible across algorithms that compute the same loss along
// different arithmetic routes.
inline constexpr double kSelectionTieBand = 1e-11;

// Deterministic stump enumeration: per feature, midpoints between consecutive
// distinct sorted values x both polarities (+1 first), then the two constant
// classifiers (+1 first). Sentinel thresholds outside the value range are not
// enumerated; they coincide with the constants.
struct StumpPool {
    struct FeatureIndex {
        std::vector<std::size_t> order;      // example indices ascending by value
        std::vector<std::size_t> group_end;  // one past each distinct-value group
        std::size_t first_candidate = 0;
    };

    std::vector<Stump> candidates;
    std::vector<FeatureIndex> features;
    std::size_t n = 0;
    std::size_t d = 0;

    std::size_t size() const { return candidates.size(); }
};

StumpPool build_pool(const Dataset& dataset);

// Sum of weights over misclassified examples (direct per-example loop).
double weighted_error(const Stump& stump, const Dataset& dataset,
                      std::span<const double> weights);

// Misclassified weight split by true class: err_pos over positives,
// err_neg over negatives.
struct ClassErrors {
    double err_pos = 0.0;
    double err_neg = 0.0;
};

// One O(n*d) pass computing ClassErrors for every pool candidate via the
// precomputed sorted-feature indices.
std::vector<ClassErrors> scan_class_errors(const StumpPool& pool,
                                           const Dataset& dataset,
                                           std::span<const double> weights);

// Per-candidate outcome of a loss functional. Algorithms that solve for the
// goodness per candidate (the theoretical variants) report it in alpha;
// error-minimizing algorithms leave it at 0 and derive alpha afterwards.
struct CandidateOutcome {
    double loss = 0.0;
    double alpha = 0.0;
};

using LossFn = std::function<CandidateOutcome(
    std::size_t index, double err_pos, double err_neg)>;

struct Selection {
    Stump stump;
    std::size_t index = 0;
    double loss = 0.0;
    double alpha = 0.0;
    double err_pos = 0.0;
    double err_neg = 0.0;
};

// Minimizes the loss functional over the pool; ties (within the band) break
// to the lowest candidate index. Returns nullopt when every candidate comes
// back non-finite.
std::optional<Selection> select_best(const StumpPool& pool,
                                     const Dataset& dataset,
                                     std::span<const double> weights,
                                     const LossFn& loss);

// Convenience: plain weighted-error selection.
std::optional<Selection> select_min_error(const StumpPool& pool,
                                          const Dataset& dataset,
                                          std::span<const double> weights);

}  // namespace costboost

#endif  // COSTBOOST_WEAKLEARN_HPP

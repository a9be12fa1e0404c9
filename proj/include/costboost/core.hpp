#ifndef COSTBOOST_CORE_HPP
#define COSTBOOST_CORE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace costboost {

// ------------------------------------------------------------
// Error types. The CLI maps these onto its exit-code contract.
// ------------------------------------------------------------

struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericsError : std::runtime_error {
    NumericsError(const std::string& msg, double best)
        : std::runtime_error(msg), best_iterate(best) {}
    double best_iterate;
};

// ------------------------------------------------------------
// Compensated (Neumaier) summation. All weight-mass arithmetic
// goes through this so that renormalized distributions stay at
// sum 1 within 1e-12 over thousands of rounds.
// ------------------------------------------------------------

class KahanAccumulator {
public:
    void add(double value) {
        double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            comp_ += (sum_ - t) + value;
        else
            comp_ += (value - t) + sum_;
        sum_ = t;
    }
    double total() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double kahan_sum(std::span<const double> values);

// ------------------------------------------------------------
// Cost specification
// ------------------------------------------------------------

// Costs of errors on each class; gamma() is the normalized asymmetry
// c_pos/(c_pos+c_neg). example_costs, when non-empty, carries one
// positive cost per training example (example-level asymmetry).
struct CostSpec {
    double c_pos = 1.0;
    double c_neg = 1.0;
    std::vector<double> example_costs;

    double gamma() const { return c_pos / (c_pos + c_neg); }
    void validate(std::size_t n_examples = 0) const;
};

// ------------------------------------------------------------
// Dataset: examples ordered positives-first (1..m positive)
// ------------------------------------------------------------

struct Dataset {
    std::vector<std::vector<double>> features;  // [example][dimension]
    std::vector<int> labels;                    // +1 / -1, positives first
    std::size_t positives = 0;                  // m
    std::vector<double> costs;                  // optional per-example costs
    std::vector<std::size_t> source_rows;       // pre-reorder row of each example

    std::size_t size() const { return features.size(); }
    std::size_t dim() const { return features.empty() ? 0 : features[0].size(); }
    std::size_t negatives() const { return size() - positives; }

    // Stable-sorts positives first, records the permutation, validates.
    static Dataset make(std::vector<std::vector<double>> features,
                        std::vector<int> labels,
                        std::vector<double> costs = {});

    void validate() const;
    Dataset with_swapped_labels() const;
};

// ------------------------------------------------------------
// Weight state
// ------------------------------------------------------------

struct WeightState {
    std::vector<double> weights;

    double total() const { return kahan_sum(weights); }
    double positive_mass(std::size_t m) const;
    // Divides by the compensated total. Throws InputError on zero mass.
    void normalize();

    static WeightState uniform(std::size_t n);
};

// gamma = mass on positives, d_pos/d_neg = class-conditional distributions.
struct Decomposition {
    double gamma;
    std::vector<double> d_pos;
    std::vector<double> d_neg;
};

Decomposition decompose_asymmetry(const WeightState& state, std::size_t m);

// Inverse of decompose_asymmetry with gamma taken from the cost spec:
// D(i) = gamma*d_pos(i) on positives, (1-gamma)*d_neg(i) on negatives.
WeightState compose_weights(const CostSpec& spec,
                            std::span<const double> d_pos,
                            std::span<const double> d_neg);

// ------------------------------------------------------------
// Weak classifiers
// ------------------------------------------------------------

struct Stump {
    enum class Kind { Threshold, Constant };

    Kind kind = Kind::Threshold;
    int feature = 0;
    double threshold = 0.0;
    int polarity = +1;       // threshold kind only
    int constant_sign = +1;  // constant kind only

    // Threshold kind: polarity * sign(x[feature] - threshold), sign(0) = +1.
    int predict(std::span<const double> x) const {
        if (kind == Kind::Constant) return constant_sign;
        return predict_value(x[static_cast<std::size_t>(feature)]);
    }
    int predict_value(double v) const {
        int s = v >= threshold ? +1 : -1;
        return polarity * s;
    }

    bool operator==(const Stump&) const = default;
};

enum class Voting { WeightedSum, CsbCostVote };

struct Prediction {
    int label;
    double score;
};

// Weighted ensemble of stumps. The detector is sign(score - threshold)
// with ties at the boundary classified as +1.
struct Ensemble {
    std::vector<std::pair<double, Stump>> members;  // (alpha, stump)
    double threshold = 0.0;                         // phi
    Voting voting = Voting::WeightedSum;
    CostSpec cost_spec;

    double score(std::span<const double> x) const;
    int classify(std::span<const double> x) const {
        return score(x) - threshold >= 0.0 ? +1 : -1;
    }
};

Prediction predict(const Ensemble& ensemble, std::span<const double> x);

// ------------------------------------------------------------
// Per-round training record
// ------------------------------------------------------------

struct RoundTrace {
    int round = 0;           // 1-based
    double epsilon = 0.0;    // selection loss of the chosen stump
    double alpha = 0.0;
    double z = 0.0;          // normalization factor of the round
    double bound = 0.0;      // running product of z
    double train_error = 0.0;  // weighted by the initial distribution
    double pos_error = 0.0;    // fraction of positives misclassified
    double neg_error = 0.0;
    double pos_mass = 0.0;     // positive weight mass before the update
};

}  // namespace costboost

#endif  // COSTBOOST_CORE_HPP

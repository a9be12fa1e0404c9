#ifndef COSTBOOST_DATAGEN_HPP
#define COSTBOOST_DATAGEN_HPP

#include <array>
#include <cstdint>
#include <string>

#include "costboost/core.hpp"

namespace costboost {

// Counter-style generator with the SplitMix64 state transition:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31
// Uniform doubles are (output >> 11) * 2^-53 in [0, 1). The integer stream is
// reproducible on any platform; gaussians go through Box-Muller on top of it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_gaussian();

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

enum class SynthKind { VjCounterexample, VjInverted, GaussianBlobs, UniformRandom };

// Generation is a pure function of (spec, seed).
//
// The vj kinds rebuild the qualitative topology of the stripe counterexample:
// five alternating class stripes along the first feature with the second
// feature arranged so no axis stump separates the classes, and so that under
// inverted labels with cost-proportionate weights (gamma = 0.8) the best
// single weak classifier is the all-positives constant.
struct SynthSpec {
    SynthKind kind = SynthKind::GaussianBlobs;
    std::size_t n_pos = 15;
    std::size_t n_neg = 15;
    std::uint64_t seed = 1;

    // gaussian_blobs geometry
    std::array<double, 2> pos_center{-1.0, -1.0};
    std::array<double, 2> neg_center{1.0, 1.0};
    double spread = 1.0;

    // uniform_random box
    double box_lo = 0.0;
    double box_hi = 1.0;
};

Dataset generate(const SynthSpec& spec);

// CSV schema: header "f1,...,fd,label" with an optional trailing "cost"
// column, comma separated, '.' decimal, labels -1/1. Loading reorders
// positives first (stable) and records the source rows.
Dataset load_csv(const std::string& path);
void save_csv(const Dataset& dataset, const std::string& path);
std::string to_csv(const Dataset& dataset);
Dataset parse_csv(const std::string& text, const std::string& origin = "<string>");

}  // namespace costboost

#endif  // COSTBOOST_DATAGEN_HPP

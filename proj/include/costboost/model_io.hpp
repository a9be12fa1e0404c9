#ifndef COSTBOOST_MODEL_IO_HPP
#define COSTBOOST_MODEL_IO_HPP

#include <string>

#include "costboost/boosters.hpp"
#include "costboost/core.hpp"

namespace costboost {

// Model file schema, version "1":
// {version, algorithm, cost_spec:{c_pos,c_neg}, threshold, voting,
//  members:[{alpha, stump:{kind, feature, threshold, polarity}}]}
// Constant stumps store their sign in "polarity".
struct ModelFile {
    std::string algorithm;
    Ensemble ensemble;
};

std::string model_to_json_text(const std::string& algorithm, const Ensemble& ensemble);
ModelFile model_from_json_text(const std::string& text, const std::string& origin);

void save_model(const std::string& path, const std::string& algorithm,
                const Ensemble& ensemble);
ModelFile load_model(const std::string& path);

// One row per round; every numeric field printed with 17 significant digits.
std::string trace_to_csv(const std::vector<RoundTrace>& trace);

}  // namespace costboost

#endif  // COSTBOOST_MODEL_IO_HPP

#include "costboost/model_io.hpp"

#include <json.hpp>

#include "costboost/io_util.hpp"

namespace costboost {

using nlohmann::json;

std::string model_to_json_text(const std::string& algorithm, const Ensemble& ensemble) {
    json members = json::array();
    for (const auto& [alpha, stump] : ensemble.members) {
        json s;
        if (stump.kind == Stump::Kind::Constant) {
            s = {{"kind", "constant"},
                 {"feature", 0},
                 {"threshold", 0.0},
                 {"polarity", stump.constant_sign}};
        } else {
            s = {{"kind", "threshold"},
                 {"feature", stump.feature},
                 {"threshold", stump.threshold},
                 {"polarity", stump.polarity}};
        }
        members.push_back({{"alpha", alpha}, {"stump", s}});
    }
    json doc = {
        {"version", "1"},
        {"algorithm", algorithm},
        {"cost_spec", {{"c_pos", ensemble.cost_spec.c_pos},
                       {"c_neg", ensemble.cost_spec.c_neg}}},
        {"threshold", ensemble.threshold},
        {"voting",
         ensemble.voting == Voting::CsbCostVote ? "csb_cost_vote" : "weighted_sum"},
        {"members", members},
    };
    return doc.dump(2) + "\n";
}

ModelFile model_from_json_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(origin + ": invalid model JSON: " + e.what());
    }
    try {
        if (doc.at("version").get<std::string>() != "1")
            throw DataError(origin + ": unsupported model schema version");
        ModelFile out;
        out.algorithm = doc.at("algorithm").get<std::string>();
        out.ensemble.cost_spec.c_pos = doc.at("cost_spec").at("c_pos").get<double>();
        out.ensemble.cost_spec.c_neg = doc.at("cost_spec").at("c_neg").get<double>();
        out.ensemble.threshold = doc.at("threshold").get<double>();
        const std::string voting = doc.at("voting").get<std::string>();
        if (voting == "weighted_sum")
            out.ensemble.voting = Voting::WeightedSum;
        else if (voting == "csb_cost_vote")
            out.ensemble.voting = Voting::CsbCostVote;
        else
            throw DataError(origin + ": unknown voting rule '" + voting + "'");
        for (const auto& member : doc.at("members")) {
            Stump s;
            const auto& js = member.at("stump");
            const std::string kind = js.at("kind").get<std::string>();
            if (kind == "constant") {
                s.kind = Stump::Kind::Constant;
                s.constant_sign = js.at("polarity").get<int>();
                if (s.constant_sign != 1 && s.constant_sign != -1)
                    throw DataError(origin + ": constant stump polarity must be -1 or 1");
            } else if (kind == "threshold") {
                s.kind = Stump::Kind::Threshold;
                s.feature = js.at("feature").get<int>();
                s.threshold = js.at("threshold").get<double>();
                s.polarity = js.at("polarity").get<int>();
                if (s.polarity != 1 && s.polarity != -1)
                    throw DataError(origin + ": stump polarity must be -1 or 1");
                if (s.feature < 0) throw DataError(origin + ": negative feature index");
            } else {
                throw DataError(origin + ": unknown stump kind '" + kind + "'");
            }
            out.ensemble.members.emplace_back(member.at("alpha").get<double>(), s);
        }
        return out;
    } catch (const json::exception& e) {
        throw DataError(origin + ": malformed model JSON: " + e.what());
    }
}

void save_model(const std::string& path, const std::string& algorithm,
                const Ensemble& ensemble) {
    write_text_atomic(path, model_to_json_text(algorithm, ensemble));
}

ModelFile load_model(const std::string& path) {
    return model_from_json_text(read_text(path), path);
}

std::string trace_to_csv(const std::vector<RoundTrace>& trace) {
    std::string out =
        "round,epsilon,alpha,z,bound,train_error,pos_error,neg_error,pos_mass\n";
    for (const auto& t : trace) {
        out += std::to_string(t.round);
        for (double v : {t.epsilon, t.alpha, t.z, t.bound, t.train_error, t.pos_error,
                         t.neg_error, t.pos_mass})
            out += "," + format_g17(v);
        out += "\n";
    }
    return out;
}

}  // namespace costboost

#include "costboost/datagen.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "costboost/io_util.hpp"

namespace costboost {

double SplitMix64::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on two uniforms; u1 is kept away from 0 for the log.
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

namespace {

// Stripe layout of the counterexample sets: five alternating class stripes
// along the first feature, adjacent stripes overlapping by 2*kOverlap so no
// single axis cut is clean. Negatives sit on a deterministic lattice that
// covers the full second-feature range and owns all four extremes of the
// set; positives are drawn inside the stripes with the second feature
// confined to the middle band.
constexpr double kOverlap = 0.25;
constexpr double kNegLo[3] = {0.0, 2.0 - kOverlap, 4.0 - kOverlap};
constexpr double kNegWidth[3] = {1.0 + kOverlap, 1.0 + 2.0 * kOverlap, 1.0 + kOverlap};
constexpr double kPosLo[2] = {1.0 - kOverlap, 3.0 - kOverlap};
constexpr double kPosWidth = 1.0 + 2.0 * kOverlap;
constexpr double kPosBandLo = 0.2;
constexpr double kPosBandWidth = 0.6;

Dataset generate_vj(const SynthSpec& spec) {
    SplitMix64 rng(spec.seed);
    std::vector<std::vector<double>> feats;
    std::vector<int> labels;
    feats.reserve(spec.n_pos + spec.n_neg);

    for (std::size_t i = 0; i < spec.n_pos; ++i) {
        const double x = kPosLo[i % 2] + kPosWidth * rng.next_double();
        const double y = kPosBandLo + kPosBandWidth * rng.next_double();
        feats.push_back({x, y});
        labels.push_back(+1);
    }

    std::size_t stripe_count[3] = {0, 0, 0};
    for (std::size_t i = 0; i < spec.n_neg; ++i) ++stripe_count[i % 3];
    std::size_t stripe_pos[3] = {0, 0, 0};
    for (std::size_t i = 0; i < spec.n_neg; ++i) {
        const std::size_t s = i % 3;
        const double frac = (static_cast<double>(stripe_pos[s]) + 0.5) /
                            static_cast<double>(stripe_count[s]);
        ++stripe_pos[s];
        const double x = kNegLo[s] + kNegWidth[s] * frac;
        const double y = spec.n_neg > 1
                             ? static_cast<double>(i) / static_cast<double>(spec.n_neg - 1)
                             : 0.5;
        feats.push_back({x, y});
        labels.push_back(-1);
    }
    return Dataset::make(std::move(feats), std::move(labels));
}

Dataset generate_blobs(const SynthSpec& spec) {
    SplitMix64 rng(spec.seed);
    std::vector<std::vector<double>> feats;
    std::vector<int> labels;
    feats.reserve(spec.n_pos + spec.n_neg);
    for (std::size_t i = 0; i < spec.n_pos; ++i) {
        feats.push_back({spec.pos_center[0] + spec.spread * rng.next_gaussian(),
                         spec.pos_center[1] + spec.spread * rng.next_gaussian()});
        labels.push_back(+1);
    }
    for (std::size_t i = 0; i < spec.n_neg; ++i) {
        feats.push_back({spec.neg_center[0] + spec.spread * rng.next_gaussian(),
                         spec.neg_center[1] + spec.spread * rng.next_gaussian()});
        labels.push_back(-1);
    }
    return Dataset::make(std::move(feats), std::move(labels));
}

Dataset generate_uniform(const SynthSpec& spec) {
    SplitMix64 rng(spec.seed);
    const double w = spec.box_hi - spec.box_lo;
    std::vector<std::vector<double>> feats;
    std::vector<int> labels;
    feats.reserve(spec.n_pos + spec.n_neg);
    for (std::size_t i = 0; i < spec.n_pos + spec.n_neg; ++i) {
        feats.push_back({spec.box_lo + w * rng.next_double(),
                         spec.box_lo + w * rng.next_double()});
        labels.push_back(i < spec.n_pos ? +1 : -1);
    }
    return Dataset::make(std::move(feats), std::move(labels));
}

}  // namespace

Dataset generate(const SynthSpec& spec) {
    if (spec.n_pos < 1 || spec.n_neg < 1)
        throw InputError("synthetic spec needs at least one example per class");
    switch (spec.kind) {
        case SynthKind::VjCounterexample:
            return generate_vj(spec);
        case SynthKind::VjInverted: {
            SynthSpec base = spec;
            base.kind = SynthKind::VjCounterexample;
            return generate_vj(base).with_swapped_labels();
        }
        case SynthKind::GaussianBlobs:
            return generate_blobs(spec);
        case SynthKind::UniformRandom:
            return generate_uniform(spec);
    }
    throw InputError("unknown synthetic kind");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& tok, const std::string& origin, std::size_t line_no) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw DataError(origin + ":" + std::to_string(line_no) +
                        ": malformed numeric field '" + tok + "'");
    return v;
}

}  // namespace

Dataset parse_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw DataError(origin + ": empty file");

    const auto header = split_csv_line(line);
    if (header.size() < 2)
        throw DataError(origin + ":1: header needs feature columns and a label column");
    bool has_cost = header.back() == "cost";
    const std::size_t d = header.size() - (has_cost ? 2 : 1);
    if (d < 1 || header[d] != "label")
        throw DataError(origin + ":1: expected header f1,...,fd,label[,cost]");
    for (std::size_t j = 0; j < d; ++j) {
        if (header[j] != "f" + std::to_string(j + 1))
            throw DataError(origin + ":1: expected feature column f" +
                            std::to_string(j + 1) + ", found '" + header[j] + "'");
    }

    std::vector<std::vector<double>> feats;
    std::vector<int> labels;
    std::vector<double> costs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto toks = split_csv_line(line);
        if (toks.size() != header.size())
            throw DataError(origin + ":" + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, found " +
                            std::to_string(toks.size()));
        std::vector<double> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = parse_double(toks[j], origin, line_no);
        const std::string& lab = toks[d];
        int y = 0;
        if (lab == "1" || lab == "+1")
            y = +1;
        else if (lab == "-1")
            y = -1;
        else
            throw DataError(origin + ":" + std::to_string(line_no) +
                            ": label must be -1 or 1, found '" + lab + "'");
        feats.push_back(std::move(row));
        labels.push_back(y);
        if (has_cost) costs.push_back(parse_double(toks[d + 1], origin, line_no));
    }
    try {
        return Dataset::make(std::move(feats), std::move(labels), std::move(costs));
    } catch (const InputError& e) {
        throw DataError(origin + ": " + e.what());
    }
}

Dataset load_csv(const std::string& path) {
    return parse_csv(read_text(path), path);
}

std::string to_csv(const Dataset& dataset) {
    std::string out;
    for (std::size_t j = 0; j < dataset.dim(); ++j) {
        out += "f" + std::to_string(j + 1) + ",";
    }
    out += "label";
    const bool has_cost = !dataset.costs.empty();
    if (has_cost) out += ",cost";
    out += "\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        for (double v : dataset.features[i]) out += format_g17(v) + ",";
        out += dataset.labels[i] > 0 ? "1" : "-1";
        if (has_cost) out += "," + format_g17(dataset.costs[i]);
        out += "\n";
    }
    return out;
}

void save_csv(const Dataset& dataset, const std::string& path) {
    write_text_atomic(path, to_csv(dataset));
}

}  // namespace costboost

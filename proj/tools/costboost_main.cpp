#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "costboost/boosters.hpp"
#include "costboost/datagen.hpp"
#include "costboost/io_util.hpp"
#include "costboost/metrics.hpp"
#include "costboost/model_io.hpp"
#include "costboost/predictors.hpp"

namespace cb = costboost;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitData = 3;
constexpr int kExitTraining = 4;

struct DatasetOptions {
    std::string data_path;
    std::string synth_kind;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::uint64_t seed = 1;
    double spread = 1.0;
    std::vector<double> pos_center{-1.0, -1.0};
    std::vector<double> neg_center{1.0, 1.0};
};

void add_dataset_options(CLI::App* cmd, DatasetOptions& opts) {
    auto* data = cmd->add_option("--data", opts.data_path, "CSV dataset path");
    auto* synth = cmd->add_option(
        "--synth", opts.synth_kind,
        "synthetic kind: vj_counterexample, vj_inverted, gaussian_blobs, uniform_random");
    data->excludes(synth);
    synth->excludes(data);
    cmd->add_option("--n-pos", opts.n_pos, "synthetic positive count (0 = kind default)");
    cmd->add_option("--n-neg", opts.n_neg, "synthetic negative count (0 = kind default)");
    cmd->add_option("--seed", opts.seed, "synthetic generator seed")->default_val(1);
    cmd->add_option("--spread", opts.spread, "gaussian blob spread")->default_val(1.0);
    cmd->add_option("--pos-center", opts.pos_center, "gaussian positive center")
        ->expected(2);
    cmd->add_option("--neg-center", opts.neg_center, "gaussian negative center")
        ->expected(2);
}

cb::SynthSpec synth_spec_from(const DatasetOptions& opts) {
    cb::SynthSpec spec;
    if (opts.synth_kind == "vj_counterexample")
        spec.kind = cb::SynthKind::VjCounterexample;
    else if (opts.synth_kind == "vj_inverted")
        spec.kind = cb::SynthKind::VjInverted;
    else if (opts.synth_kind == "gaussian_blobs")
        spec.kind = cb::SynthKind::GaussianBlobs;
    else if (opts.synth_kind == "uniform_random")
        spec.kind = cb::SynthKind::UniformRandom;
    else
        throw cb::InputError("unknown synthetic kind '" + opts.synth_kind + "'");

    const bool vj = spec.kind == cb::SynthKind::VjCounterexample ||
                    spec.kind == cb::SynthKind::VjInverted;
    spec.n_pos = opts.n_pos ? opts.n_pos : (vj ? 16 : 15);
    spec.n_neg = opts.n_neg ? opts.n_neg : (vj ? 24 : 15);
    spec.seed = opts.seed;
    spec.spread = opts.spread;
    spec.pos_center = {opts.pos_center[0], opts.pos_center[1]};
    spec.neg_center = {opts.neg_center[0], opts.neg_center[1]};
    return spec;
}

struct ResolvedData {
    cb::Dataset dataset;
    std::string source;
};

ResolvedData resolve_dataset(const DatasetOptions& opts) {
    if (!opts.data_path.empty())
        return {cb::load_csv(opts.data_path), opts.data_path};
    if (!opts.synth_kind.empty()) {
        const cb::SynthSpec spec = synth_spec_from(opts);
        return {cb::generate(spec),
                "synth:" + opts.synth_kind + ":seed=" + std::to_string(opts.seed)};
    }
    throw cb::InputError("one of --data or --synth is required");
}

json cost_report_json(const cb::CostErrorReport& r) {
    return json{{"err_pos", r.err_pos},
                {"err_neg", r.err_neg},
                {"global", r.global},
                {"raw", r.raw}};
}

unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("COSTBOOST_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

// ------------------------------------------------------------
// train
// ------------------------------------------------------------

struct TrainArgs {
    DatasetOptions data;
    std::string algo = "adaboost";
    double cp = 1.0;
    double cn = 1.0;
    int rounds = 10;
    std::string out_dir = ".";
    std::string validation_path;
};

int run_train(const TrainArgs& args) {
    const auto algo = cb::algorithm_from_name(args.algo);
    if (!algo) throw cb::InputError("unknown algorithm '" + args.algo + "'");

    const ResolvedData resolved = resolve_dataset(args.data);
    const cb::Dataset& dataset = resolved.dataset;

    if (*algo == cb::Algorithm::AdaBoost && args.cp != args.cn)
        std::cerr << "warning: adaboost is cost-insensitive; --cp/--cn are ignored "
                     "during training\n";

    cb::TrainConfig config;
    config.algorithm = *algo;
    config.rounds = args.rounds;
    config.cost_spec.c_pos = args.cp;
    config.cost_spec.c_neg = args.cn;
    config.seed = args.data.seed;

    cb::Dataset validation_storage;
    const cb::Dataset* validation = nullptr;
    if (!args.validation_path.empty()) {
        validation_storage = cb::load_csv(args.validation_path);
        validation = &validation_storage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const cb::StumpPool pool = cb::build_pool(dataset);
    const cb::TrainedModel model = cb::train(config, dataset, pool, validation);
    const auto t1 = std::chrono::steady_clock::now();

    std::filesystem::create_directories(args.out_dir);
    const std::string model_path = args.out_dir + "/model.json";
    const std::string trace_path = args.out_dir + "/trace.csv";
    const std::string manifest_path = args.out_dir + "/manifest.json";

    cb::save_model(model_path, std::string(cb::algorithm_name(*algo)), model.ensemble);
    cb::write_text_atomic(trace_path, cb::trace_to_csv(model.trace));

    char fingerprint[32];
    std::snprintf(fingerprint, sizeof(fingerprint), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(cb::fnv1a64(cb::to_csv(dataset))));
    json manifest = {
        {"version", "1"},
        {"command", "train"},
        {"algorithm", std::string(cb::algorithm_name(*algo))},
        {"rounds", args.rounds},
        {"cost_spec", {{"c_pos", args.cp}, {"c_neg", args.cn}}},
        {"seed", args.data.seed},
        {"dataset",
         {{"source", resolved.source},
          {"fingerprint", fingerprint},
          {"n", dataset.size()},
          {"d", dataset.dim()},
          {"m", dataset.positives}}},
        {"outputs", {model_path, trace_path}},
        {"duration_ms",
         std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()},
    };
    cb::write_text_atomic(manifest_path, manifest.dump(2) + "\n");
    return kExitOk;
}

// ------------------------------------------------------------
// eval
// ------------------------------------------------------------

struct EvalArgs {
    std::string model_path;
    std::string data_path;
    double cp = 0.0;  // 0 = take from model
    double cn = 0.0;
};

int run_eval(const EvalArgs& args) {
    const cb::ModelFile model = cb::load_model(args.model_path);
    const cb::Dataset dataset = cb::load_csv(args.data_path);

    for (const auto& [alpha, stump] : model.ensemble.members) {
        if (stump.kind == cb::Stump::Kind::Threshold &&
            static_cast<std::size_t>(stump.feature) >= dataset.dim())
            throw cb::DataError("model expects feature index " +
                                std::to_string(stump.feature) + " but dataset has " +
                                std::to_string(dataset.dim()) + " dimensions");
    }

    cb::CostSpec spec = model.ensemble.cost_spec;
    if (args.cp > 0.0) spec.c_pos = args.cp;
    if (args.cn > 0.0) spec.c_neg = args.cn;

    const cb::CostErrorReport report = cb::cost_error(model.ensemble, dataset, spec);
    std::cout << cost_report_json(report).dump(2) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------
// sweep
// ------------------------------------------------------------

struct SweepArgs {
    DatasetOptions data;
    std::vector<std::string> algos;
    std::vector<std::string> ratios;
    int rounds = 50;
    std::string out_path = "sweep.csv";
};

struct SweepCell {
    cb::Algorithm algo;
    double cp;
    double cn;
};

std::pair<double, double> parse_ratio(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw cb::InputError("cost ratio must look like '2:1', got '" + text + "'");
    try {
        const double cp = std::stod(text.substr(0, colon));
        const double cn = std::stod(text.substr(colon + 1));
        if (!(cp > 0.0) || !(cn > 0.0)) throw cb::InputError("costs must be positive");
        return {cp, cn};
    } catch (const std::exception&) {
        throw cb::InputError("cost ratio must look like '2:1', got '" + text + "'");
    }
}

int run_sweep(const SweepArgs& args) {
    if (args.algos.empty()) throw cb::InputError("--algos is required");
    if (args.ratios.empty()) throw cb::InputError("--ratios is required");

    std::vector<SweepCell> cells;
    for (const auto& name : args.algos) {
        const auto algo = cb::algorithm_from_name(name);
        if (!algo) throw cb::InputError("unknown algorithm '" + name + "'");
        for (const auto& ratio : args.ratios) {
            const auto [cp, cn] = parse_ratio(ratio);
            cells.push_back(SweepCell{*algo, cp, cn});
        }
    }

    const ResolvedData resolved = resolve_dataset(args.data);
    const cb::Dataset& dataset = resolved.dataset;
    const cb::StumpPool pool = cb::build_pool(dataset);

    struct CellResult {
        cb::CostErrorReport report;
        long runtime_ms = 0;
        std::string error;
    };
    std::vector<CellResult> results(cells.size());

    const unsigned workers =
        std::min<unsigned>(thread_budget(), static_cast<unsigned>(cells.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            const SweepCell& cell = cells[i];
            cb::TrainConfig config;
            config.algorithm = cell.algo;
            config.rounds = args.rounds;
            config.cost_spec.c_pos = cell.cp;
            config.cost_spec.c_neg = cell.cn;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const cb::TrainedModel model = cb::train(config, dataset, pool);
                results[i].report =
                    cb::cost_error(model.ensemble, dataset, config.cost_spec);
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
            const auto t1 = std::chrono::steady_clock::now();
            results[i].runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        }
    };
    std::vector<std::thread> threads;
    for (unsigned k = 1; k < workers; ++k) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    std::string csv = "algorithm,c_pos,c_neg,err_global,err_pos,err_neg,runtime_ms,status\n";
    std::size_t failures = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& cell = cells[i];
        const auto& res = results[i];
        csv += std::string(cb::algorithm_name(cell.algo));
        csv += "," + cb::format_g17(cell.cp) + "," + cb::format_g17(cell.cn);
        if (res.error.empty()) {
            csv += "," + cb::format_g17(res.report.global) + "," +
                   cb::format_g17(res.report.err_pos) + "," +
                   cb::format_g17(res.report.err_neg);
        } else {
            csv += ",,,";
            ++failures;
        }
        csv += "," + std::to_string(res.runtime_ms);
        std::string status = res.error.empty() ? "ok" : res.error;
        for (char& c : status)
            if (c == ',' || c == '\n') c = ';';
        csv += "," + status + "\n";
    }
    cb::write_text_atomic(args.out_path, csv);
    if (failures == cells.size()) {
        std::cerr << "error: every sweep cell failed\n";
        return kExitTraining;
    }
    return kExitOk;
}

// ------------------------------------------------------------
// predictor-map
// ------------------------------------------------------------

struct MapArgs {
    std::string variant = "cga";
    int p_count = 99;
    int gamma_count = 9;
    std::string out_path = "predictor_map.csv";
};

int run_predictor_map(const MapArgs& args) {
    cb::PredictorVariant variant;
    if (args.variant == "ab")
        variant = cb::PredictorVariant::Ab;
    else if (args.variant == "cga")
        variant = cb::PredictorVariant::Cga;
    else if (args.variant == "csa")
        variant = cb::PredictorVariant::Csa;
    else
        throw cb::InputError("variant must be ab, cga or csa");
    if (args.p_count < 1 || args.gamma_count < 1)
        throw cb::InputError("grid counts must be positive");

    std::vector<double> ps(args.p_count);
    for (int i = 0; i < args.p_count; ++i)
        ps[i] = static_cast<double>(i + 1) / static_cast<double>(args.p_count + 1);
    std::vector<double> gammas(args.gamma_count);
    for (int j = 0; j < args.gamma_count; ++j)
        gammas[j] = static_cast<double>(j + 1) / static_cast<double>(args.gamma_count + 1);

    const auto grid = cb::isoline_grid(variant, gammas, ps);
    std::string csv = "p,gamma,f\n";
    for (const auto& pt : grid)
        csv += cb::format_g17(pt.p) + "," + cb::format_g17(pt.gamma) + "," +
               cb::format_g17(pt.f) + "\n";
    cb::write_text_atomic(args.out_path, csv);

    const auto witnesses = cb::find_gamma_inversions(variant, gammas, ps);
    if (!witnesses.empty()) {
        const auto& w = witnesses.front();
        std::cerr << "non-monotone gamma row: p=" << w.p << " f(gamma=" << w.gamma_lo
                  << ")=" << w.f_lo << " > f(gamma=" << w.gamma_hi << ")=" << w.f_hi
                  << " > 0 (" << witnesses.size() << " witnesses on the grid)\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cost-sensitive boosting toolkit"};
    app.require_subcommand(1);

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand("train", "train a boosted classifier");
    add_dataset_options(train_cmd, train_args.data);
    train_cmd->add_option("--algo", train_args.algo, "training algorithm")->required();
    train_cmd->add_option("--cp", train_args.cp, "cost of errors on positives")
        ->default_val(1.0);
    train_cmd->add_option("--cn", train_args.cn, "cost of errors on negatives")
        ->default_val(1.0);
    train_cmd->add_option("--rounds", train_args.rounds, "training rounds")
        ->default_val(10);
    train_cmd->add_option("--out", train_args.out_dir, "output directory")->required();
    train_cmd->add_option("--validation", train_args.validation_path,
                          "validation CSV for threshold tuning (default: training set)");

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a model on a dataset");
    eval_cmd->add_option("--model", eval_args.model_path, "model JSON path")->required();
    eval_cmd->add_option("--data", eval_args.data_path, "CSV dataset path")->required();
    eval_cmd->add_option("--cp", eval_args.cp, "override cost of errors on positives");
    eval_cmd->add_option("--cn", eval_args.cn, "override cost of errors on negatives");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "train a grid of (algorithm, cost) cells");
    add_dataset_options(sweep_cmd, sweep_args.data);
    sweep_cmd->add_option("--algos", sweep_args.algos, "algorithms to sweep")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--ratios", sweep_args.ratios, "cost ratios, e.g. 2:1,4:1")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--rounds", sweep_args.rounds, "training rounds")
        ->default_val(50);
    sweep_cmd->add_option("--out", sweep_args.out_path, "summary CSV path")->required();

    MapArgs map_args;
    auto* map_cmd =
        app.add_subcommand("predictor-map", "export optimal-predictor isoline grid");
    map_cmd->add_option("--variant", map_args.variant, "ab, cga or csa")->required();
    map_cmd->add_option("--p-count", map_args.p_count, "likelihood grid size")
        ->default_val(99);
    map_cmd->add_option("--gamma-count", map_args.gamma_count, "asymmetry grid size")
        ->default_val(9);
    map_cmd->add_option("--out", map_args.out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitArgs;
    }

    try {
        if (train_cmd->parsed()) return run_train(train_args);
        if (eval_cmd->parsed()) return run_eval(eval_args);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (map_cmd->parsed()) return run_predictor_map(map_args);
        return kExitArgs;
    } catch (const cb::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgs;
    } catch (const cb::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTraining;
    }
}

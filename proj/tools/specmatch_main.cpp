#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "specmatch/diagnostics.hpp"
#include "specmatch/harness.hpp"
#include "specmatch/io.hpp"
#include "specmatch/models.hpp"
#include "specmatch/rounding.hpp"
#include "specmatch/similarity.hpp"
#include "specmatch/verify.hpp"

namespace {

using namespace specmatch;

int env_workers(int fallback) {
    if (const char* env = std::getenv("SPECMATCH_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (...) {
        }
        throw ConfigError("SPECMATCH_WORKERS must be a positive integer");
    }
    return fallback;
}

struct GenerateArgs {
    int n = 100;
    double p = 0.5;
    double s = 1.0;
    double sigma = 0.0;
    std::string model = "erdos_renyi";
    uint64_t seed = 1;
    std::string truth_mode = "random";
    std::string out_dir = ".";
};

int cmd_generate(const GenerateArgs& args) {
    const TruthMode mode =
        args.truth_mode == "identity" ? TruthMode::identity : TruthMode::random;
    const CorrelatedPair pair =
        args.model == "gaussian"
            ? gen_gaussian_pair(args.n, args.sigma, args.seed, mode)
            : gen_er_pair(args.n, args.p, args.s, args.seed, mode);
    std::filesystem::create_directories(args.out_dir);
    const std::filesystem::path dir(args.out_dir);
    write_matrix_file((dir / "a.txt").string(), pair.a);
    write_matrix_file((dir / "b.txt").string(), pair.b);
    write_permutation_file((dir / "truth.txt").string(), pair.truth);
    std::cout << "n=" << pair.n << " model=" << to_string(pair.model)
              << " sigma_emp=" << format_real(pair.sigma_emp) << " d=" << format_real(pair.d)
              << " seed=" << pair.seed << '\n';
    return 0;
}

struct MatchArgs {
    std::string a_file;
    std::string b_file;
    std::string truth_file;
    std::string out_file;
    double eta = 0.2;
    double sigma = 0.0;
    std::string method = "grampa";
    std::string rounder = "lap";
};

int cmd_match(const MatchArgs& args) {
    const Mat a = read_matrix_file(args.a_file);
    const Mat b = read_matrix_file(args.b_file);
    const Method method = method_from_string(args.method);
    if (method != Method::grampa && method != Method::rowqp)
        throw ParamError("match: method must be grampa or rowqp");
    const SimilarityMatrix x =
        method == Method::grampa ? grampa(a, b, args.eta) : rowqp(a, b, args.eta);
    Matching match;
    switch (rounder_from_string(args.rounder)) {
        case Rounder::lap: match = lap_round(x); break;
        case Rounder::greedy: match = greedy_round(x); break;
        case Rounder::argmax: match = argmax_round(x); break;
    }
    std::ostream* out = &std::cout;
    std::ofstream file_out;
    if (!args.out_file.empty()) {
        file_out.open(args.out_file);
        if (!file_out) throw IoError("cannot open for writing: " + args.out_file);
        out = &file_out;
    }
    for (int i = 0; i < match.size(); ++i) *out << i << ' ' << match.map[i] << '\n';
    if (!args.truth_file.empty()) {
        const Permutation truth = read_permutation_file(args.truth_file);
        std::cout << "overlap=" << format_real(overlap(match, truth)) << '\n';
        const DominanceReport report =
            dominance_report(x, truth, args.sigma, method == Method::rowqp);
        std::cout << "min_true=" << format_real(report.min_true) << '\n'
                  << "max_off=" << format_real(report.max_off) << '\n'
                  << "margin=" << format_real(report.margin) << '\n'
                  << "separated=" << (report.separated ? 1 : 0) << '\n'
                  << "pred_diag=" << format_real(report.pred_diag) << '\n'
                  << "diag_mean=" << format_real(report.diag_mean) << '\n'
                  << "diag_rel_err=" << format_real(report.diag_rel_err) << '\n';
    }
    return 0;
}

struct SweepArgs {
    std::string config_file;
    std::string out_file = "sweep.csv";
    std::string plot_data_prefix;
    bool timings = false;
    int workers_override = 0;
};

int cmd_sweep(const SweepArgs& args) {
    ExperimentConfig config = load_config_file(args.config_file);
    config.workers = env_workers(config.workers);
    if (args.workers_override >= 1) config.workers = args.workers_override;
    SweepOptions options;
    options.timings = args.timings;
    options.plot_data_prefix = args.plot_data_prefix;
    run_sweep_to_file(config, args.out_file, options);
    std::cout << "wrote " << args.out_file << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral graph matching toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "generate a correlated pair");
    generate->add_option("--n", gen.n, "number of vertices");
    generate->add_option("--p", gen.p, "marginal edge density (erdos_renyi)");
    generate->add_option("--s", gen.s, "edge retention (erdos_renyi)");
    generate->add_option("--sigma", gen.sigma, "noise level (gaussian)");
    generate->add_option("--model", gen.model, "erdos_renyi or gaussian")
        ->check(CLI::IsMember({"erdos_renyi", "gaussian"}));
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("--truth-mode", gen.truth_mode, "identity or random")
        ->check(CLI::IsMember({"identity", "random"}));
    generate->add_option("--out", gen.out_dir, "output directory");

    MatchArgs match;
    CLI::App* match_cmd = app.add_subcommand("match", "match two dumped matrices");
    match_cmd->add_option("--a", match.a_file, "matrix dump for A")->required();
    match_cmd->add_option("--b", match.b_file, "matrix dump for B")->required();
    match_cmd->add_option("--truth", match.truth_file, "ground-truth permutation file");
    match_cmd->add_option("--out", match.out_file, "write the matching here");
    match_cmd->add_option("--eta", match.eta, "regularization bandwidth");
    match_cmd->add_option("--sigma", match.sigma, "noise level for the diagonal prediction");
    match_cmd->add_option("--method", match.method, "grampa or rowqp")
        ->check(CLI::IsMember({"grampa", "rowqp"}));
    match_cmd->add_option("--rounder", match.rounder, "lap, greedy, or argmax")
        ->check(CLI::IsMember({"lap", "greedy", "argmax"}));

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a noise sweep from a config file");
    sweep_cmd->add_option("--config", sweep.config_file, "config file")->required();
    sweep_cmd->add_option("--out", sweep.out_file, "output CSV path");
    sweep_cmd->add_option("--plot-data", sweep.plot_data_prefix,
                          "prefix for per-method (noise, mean overlap) files");
    sweep_cmd->add_flag("--timings", sweep.timings,
                        "record wall-clock runtime_ms (breaks byte reproducibility)");
    sweep_cmd->add_option("--workers", sweep.workers_override, "worker threads");

    bool mutate_contour = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle and identity suite");
    verify_cmd
        ->add_flag("--inject-contour-sign-error", mutate_contour,
                   "test fixture: flip the contour orientation")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (match_cmd->parsed()) return cmd_match(match);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.inject_contour_sign_error = mutate_contour;
            return run_verify(std::cout, options) ? 0 : 1;
        }
    } catch (const specmatch::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

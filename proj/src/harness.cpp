#include "specmatch/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "specmatch/diagnostics.hpp"
#include "specmatch/io.hpp"
#include "specmatch/models.hpp"
#include "specmatch/rng.hpp"
#include "specmatch/rounding.hpp"
#include "specmatch/similarity.hpp"

namespace specmatch {

std::string to_string(Rounder r) {
    switch (r) {
        case Rounder::lap: return "lap";
        case Rounder::greedy: return "greedy";
        case Rounder::argmax: return "argmax";
    }
    return "unknown";
}

Rounder rounder_from_string(const std::string& s) {
    if (s == "lap") return Rounder::lap;
    if (s == "greedy") return Rounder::greedy;
    if (s == "argmax") return Rounder::argmax;
    throw ConfigError("unknown rounder: " + s);
}

void ExperimentConfig::validate() const {
    if (n < 2) throw ConfigError("config: n must be >= 2");
    if (noise_grid.empty()) throw ConfigError("config: noise_grid must be nonempty");
    if (reps < 1) throw ConfigError("config: reps must be >= 1");
    if (eta <= 0.0) throw ConfigError("config: eta must be positive");
    if (methods.empty()) throw ConfigError("config: methods must be nonempty");
    if (rounders.empty()) throw ConfigError("config: rounders must be nonempty");
    if (workers < 1) throw ConfigError("config: workers must be >= 1");
    if (truth_mode != "identity" && truth_mode != "random")
        throw ConfigError("config: truth_mode must be identity or random");
    for (double v : noise_grid) {
        if (model == ModelKind::erdos_renyi && (v <= 0.0 || v > 1.0))
            throw ConfigError("config: s values must be in (0,1]");
        if (model == ModelKind::gaussian && (v < 0.0 || v > 1.0))
            throw ConfigError("config: sigma values must be in [0,1]");
    }
    if (model == ModelKind::erdos_renyi && (p <= 0.0 || p >= 1.0))
        throw ConfigError("config: p must be in (0,1)");
}

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = text.find_last_not_of(" \t\r\n");
    return text.substr(b, e - b + 1);
}

ModelKind model_from_string(const std::string& s) {
    if (s == "erdos_renyi") return ModelKind::erdos_renyi;
    if (s == "gaussian") return ModelKind::gaussian;
    throw ConfigError("unknown model: " + s);
}

template <typename T>
T parse_number(const std::string& text, const std::string& key) {
    std::istringstream in(strip(text));
    T value;
    if (!(in >> value)) throw ConfigError("config: cannot parse value for " + key);
    std::string rest;
    if (in >> rest) throw ConfigError("config: trailing junk in value for " + key);
    return value;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n") {
        cfg.n = parse_number<int>(value, key);
    } else if (key == "p") {
        cfg.p = parse_number<double>(value, key);
    } else if (key == "noise_grid") {
        cfg.noise_grid.clear();
        for (const std::string& item : split_list(value))
            cfg.noise_grid.push_back(parse_number<double>(item, key));
    } else if (key == "model") {
        cfg.model = model_from_string(strip(value));
    } else if (key == "eta") {
        cfg.eta = parse_number<double>(value, key);
    } else if (key == "methods") {
        cfg.methods.clear();
        for (const std::string& item : split_list(value)) {
            const Method m = method_from_string(item);
            if (m != Method::grampa && m != Method::rowqp)
                throw ConfigError("config: methods must be grampa or rowqp");
            cfg.methods.push_back(m);
        }
    } else if (key == "rounders") {
        cfg.rounders.clear();
        for (const std::string& item : split_list(value))
            cfg.rounders.push_back(rounder_from_string(item));
    } else if (key == "reps") {
        cfg.reps = parse_number<int>(value, key);
    } else if (key == "base_seed") {
        cfg.base_seed = parse_number<uint64_t>(value, key);
    } else if (key == "truth_mode") {
        cfg.truth_mode = strip(value);
    } else if (key == "workers") {
        cfg.workers = parse_number<int>(value, key);
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

ExperimentConfig parse_config_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: JSON root must be an object");
    ExperimentConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "noise_grid") {
            if (!value.is_array()) throw ConfigError("config: noise_grid must be an array");
            cfg.noise_grid.clear();
            for (const auto& item : value) cfg.noise_grid.push_back(item.get<double>());
        } else if (key == "methods" || key == "rounders") {
            if (!value.is_array()) throw ConfigError("config: " + key + " must be an array");
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) joined += ',';
                joined += item.get<std::string>();
            }
            apply_key(cfg, key, joined);
        } else if (value.is_string()) {
            apply_key(cfg, key, value.get<std::string>());
        } else {
            apply_key(cfg, key, value.dump());
        }
    }
    return cfg;
}

ExperimentConfig parse_config_flat(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = strip(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value, got '" + stripped + "'");
        apply_key(cfg, strip(stripped.substr(0, eq)), stripped.substr(eq + 1));
    }
    return cfg;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    const std::string stripped = strip(text);
    if (stripped.empty()) throw ConfigError("config: empty");
    ExperimentConfig cfg =
        stripped[0] == '{' ? parse_config_json(stripped) : parse_config_flat(stripped);
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

uint64_t trial_seed(uint64_t base_seed, int noise_index, int rep) {
    uint64_t h = rng::mix64(static_cast<uint64_t>(noise_index) + rng::kGamma);
    h = rng::chain(h, static_cast<uint64_t>(rep));
    return base_seed ^ h;
}

const char* const kCsvHeader =
    "method,rounder,n,p,noise,sigma_emp,eta,rep,seed,overlap,min_true,max_off,margin,"
    "diag_rel_err,separated,runtime_ms,summary";

namespace {

std::string format_row(const TrialRecord& r, bool summary) {
    std::ostringstream out;
    out << to_string(r.method) << ',' << to_string(r.rounder) << ',' << r.n << ','
        << format_real(r.p) << ',' << format_real(r.noise) << ',' << format_real(r.sigma_emp)
        << ',' << format_real(r.eta) << ',' << r.rep << ',' << r.seed << ','
        << format_real(r.overlap) << ',' << format_real(r.min_true) << ','
        << format_real(r.max_off) << ',' << format_real(r.margin) << ','
        << format_real(r.diag_rel_err) << ',' << (r.separated ? 1 : 0) << ',' << r.runtime_ms
        << ',' << (summary ? 1 : 0);
    return out.str();
}

}  // namespace

std::string format_trial_row(const TrialRecord& r) { return format_row(r, false); }

namespace {

struct TrialResult {
    std::vector<TrialRecord> rows;  // canonical (method, rounder) order
};

TrialResult run_trial(const ExperimentConfig& cfg, int noise_index, int rep,
                      const SweepOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const double noise = cfg.noise_grid[noise_index];
    const uint64_t seed = trial_seed(cfg.base_seed, noise_index, rep);
    const TruthMode mode =
        cfg.truth_mode == "identity" ? TruthMode::identity : TruthMode::random;

    const CorrelatedPair pair =
        cfg.model == ModelKind::erdos_renyi
            ? gen_er_pair(cfg.n, cfg.p, noise, seed, mode)
            : gen_gaussian_pair(cfg.n, noise, seed, mode);
    const EigenDecomp ea = eig_sym(pair.a);
    const EigenDecomp eb = eig_sym(pair.b);

    TrialResult result;
    for (const Method method : cfg.methods) {
        const SimilarityMatrix x = method == Method::grampa
                                       ? grampa_from_eig(ea, eb, cfg.eta)
                                       : rowqp_from_eig(ea, eb, cfg.eta);
        const DominanceReport report =
            dominance_report(x, pair.truth, pair.sigma_emp, method == Method::rowqp);
        for (const Rounder rounder : cfg.rounders) {
            Matching match;
            switch (rounder) {
                case Rounder::lap: match = lap_round(x); break;
                case Rounder::greedy: match = greedy_round(x); break;
                case Rounder::argmax: match = argmax_round(x); break;
            }
            TrialRecord row;
            row.method = method;
            row.rounder = rounder;
            row.n = cfg.n;
            row.p = cfg.model == ModelKind::erdos_renyi ? cfg.p : 0.0;
            row.noise = noise;
            row.sigma_emp = pair.sigma_emp;
            row.eta = cfg.eta;
            row.rep = rep;
            row.seed = seed;
            row.overlap = overlap(match, pair.truth);
            row.min_true = report.min_true;
            row.max_off = report.max_off;
            row.margin = report.margin;
            row.diag_rel_err = report.diag_rel_err;
            row.separated = report.separated;
            row.runtime_ms = 0;
            result.rows.push_back(row);
        }
    }
    if (options.timings) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        const long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        for (TrialRecord& row : result.rows) row.runtime_ms = ms;
    }
    return result;
}

}  // namespace

void run_sweep(const ExperimentConfig& config, std::ostream& csv_out,
               const SweepOptions& options) {
    config.validate();
    const int noise_count = static_cast<int>(config.noise_grid.size());
    const int trial_count = noise_count * config.reps;
    std::vector<TrialResult> results(trial_count);

    // Trials are independent; results land in preassigned slots so output
    // order never depends on scheduling.
    std::mutex queue_mutex;
    int next_trial = 0;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (;;) {
            int index;
            {
                std::lock_guard<std::mutex> lock(queue_mutex);
                if (failure || next_trial >= trial_count) return;
                index = next_trial++;
            }
            try {
                results[index] =
                    run_trial(config, index / config.reps, index % config.reps, options);
            } catch (...) {
                std::lock_guard<std::mutex> lock(queue_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    const int pool_size = std::min(config.workers, trial_count);
    if (pool_size <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(pool_size);
        for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    csv_out << kCsvHeader << '\n';
    for (const TrialResult& trial : results)
        for (const TrialRecord& row : trial.rows) csv_out << format_trial_row(row) << '\n';

    // Summary rows: per (noise, method, rounder), mean overlap and its
    // population stddev, flagged in the last column.
    struct Key {
        int noise_index;
        size_t method_index;
        size_t rounder_index;
        bool operator<(const Key& other) const {
            if (noise_index != other.noise_index) return noise_index < other.noise_index;
            if (method_index != other.method_index) return method_index < other.method_index;
            return rounder_index < other.rounder_index;
        }
    };
    std::map<Key, std::vector<double>> groups;
    for (int noise_index = 0; noise_index < noise_count; ++noise_index)
        for (int rep = 0; rep < config.reps; ++rep) {
            const TrialResult& trial = results[noise_index * config.reps + rep];
            size_t row_index = 0;
            for (size_t mi = 0; mi < config.methods.size(); ++mi)
                for (size_t ri = 0; ri < config.rounders.size(); ++ri)
                    groups[{noise_index, mi, ri}].push_back(
                        trial.rows[row_index++].overlap);
        }
    for (const auto& [key, values] : groups) {
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= static_cast<double>(values.size());
        TrialRecord row{};
        row.method = config.methods[key.method_index];
        row.rounder = config.rounders[key.rounder_index];
        row.n = config.n;
        row.p = config.model == ModelKind::erdos_renyi ? config.p : 0.0;
        row.noise = config.noise_grid[key.noise_index];
        row.sigma_emp = 0.0;
        row.eta = config.eta;
        row.rep = -1;
        row.seed = 0;
        row.overlap = mean;
        row.min_true = std::sqrt(var);
        csv_out << format_row(row, true) << '\n';
    }

    if (!options.plot_data_prefix.empty()) {
        for (size_t mi = 0; mi < config.methods.size(); ++mi)
            for (size_t ri = 0; ri < config.rounders.size(); ++ri) {
                const std::string path = options.plot_data_prefix + "_" +
                                         to_string(config.methods[mi]) + "_" +
                                         to_string(config.rounders[ri]) + ".dat";
                std::ofstream out(path);
                if (!out) throw IoError("cannot open for writing: " + path);
                for (int noise_index = 0; noise_index < noise_count; ++noise_index) {
                    const auto& values = groups[{noise_index, mi, ri}];
                    double mean = 0.0;
                    for (double v : values) mean += v;
                    mean /= static_cast<double>(values.size());
                    out << format_real(config.noise_grid[noise_index]) << ' '
                        << format_real(mean) << '\n';
                }
            }
    }
}

void run_sweep_to_file(const ExperimentConfig& config, const std::string& csv_path,
                       const SweepOptions& options) {
    std::ofstream out(csv_path);
    if (!out) throw IoError("cannot open for writing: " + csv_path);
    run_sweep(config, out, options);
    if (!out) throw IoError("write failed: " + csv_path);
}

}  // namespace specmatch

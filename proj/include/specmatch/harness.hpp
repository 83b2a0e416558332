#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "specmatch/types.hpp"

namespace specmatch {

enum class Rounder { lap, greedy, argmax };

std::string to_string(Rounder r);
Rounder rounder_from_string(const std::string& s);

struct ExperimentConfig {
    int n = 0;
    double p = 0.5;
    std::vector<double> noise_grid;  // s values (erdos_renyi) or sigma values (gaussian)
    ModelKind model = ModelKind::erdos_renyi;
    double eta = 0.2;
    std::vector<Method> methods = {Method::grampa, Method::rowqp};
    std::vector<Rounder> rounders = {Rounder::lap};
    int reps = 10;
    uint64_t base_seed = 1;
    std::string truth_mode = "random";
    int workers = 1;

    void validate() const;
};

// Flat key=value lines or a single JSON object; unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

uint64_t trial_seed(uint64_t base_seed, int noise_index, int rep);

struct TrialRecord {
    Method method;
    Rounder rounder;
    int n;
    double p;
    double noise;
    double sigma_emp;
    double eta;
    int rep;
    uint64_t seed;
    double overlap;
    double min_true;
    double max_off;
    double margin;
    double diag_rel_err;
    bool separated;
    long runtime_ms;
};

struct SweepOptions {
    bool timings = false;          // wall-clock runtime_ms (breaks byte reproducibility)
    std::string plot_data_prefix;  // when set, emit per-method (noise, mean overlap) files
};

extern const char* const kCsvHeader;

std::string format_trial_row(const TrialRecord& r);

// Runs the full grid and writes trial rows in canonical
// (noise, rep, method, rounder) order followed by summary rows
// (rep = -1, mean overlap in the overlap column, population stddev in
// min_true, summary flag 1).
void run_sweep(const ExperimentConfig& config, std::ostream& csv_out,
               const SweepOptions& options = {});
void run_sweep_to_file(const ExperimentConfig& config, const std::string& csv_path,
                       const SweepOptions& options = {});

}  // namespace specmatch

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qsr/analysis.hpp"
#include "qsr/graph.hpp"
#include "qsr/ranks.hpp"

namespace qsr {

// Grid description for the statistical studies. A cell is one
// (N, M, seed_index) triple; its seed is derive_seed({master_seed, N, M,
// seed_index}), so cells are reproducible in any execution order.
struct SweepConfig {
    std::vector<int> sizes;
    std::vector<int> marked_counts;
    int seeds_per_cell = 3;
    double alpha = 0.25;
    double t_max_factor = 3.0;  // t_max = ceil(factor * sqrt(N/M))
    std::vector<Algorithm> algorithms = {Algorithm::quantum, Algorithm::semiclassical,
                                         Algorithm::randomized};
    std::uint64_t master_seed = 1;
    ScaleFreeParams graph_params;
    StationaryOptions stationary;
    double asymptotic_ratio = 20.0;  // N/M cutoff for aggregates and probability fits

    // Kendall-study knobs.
    double pagerank_alpha = 0.85;
    PagerankOptions pagerank;
    int quantum_pagerank_steps = 1000;

    int jobs = 1;           // concurrent cells
    int threads_per_cell = 0;  // walk-level workers; 0 = hardware threads / jobs

    void validate() const;  // throws std::invalid_argument

    std::string to_json() const;
    static SweepConfig from_json_text(const std::string& text);
    static SweepConfig from_json_file(const std::string& path);
};

struct ResultRecord {
    int n_nodes = 0;
    int marked_count = 0;
    int seed_index = 0;
    std::uint64_t cell_seed = 0;
    double alpha = 0.0;
    Algorithm algorithm = Algorithm::quantum;
    int t_star = -1;       // -1: not available (error cell)
    double p_star = 0.0;
    bool boundary = false;
    int t_ref = -1;
    double p_ref = 0.0;
    int tc_star = -1;      // classical steps at t_star; -1 when not applicable
    double wall_seconds = 0.0;
    std::string error;     // empty when the cell succeeded

    bool ok() const { return error.empty(); }
    double ratio() const { return static_cast<double>(n_nodes) / marked_count; }
};

// One record per (cell, algorithm); failed cells yield records with `error`
// set rather than aborting the sweep. Output is sorted by
// (N, M, seed_index, algorithm) regardless of `jobs`.
std::vector<ResultRecord> run_sweep(const SweepConfig& cfg);

struct AlphaSweepConfig {
    int n_nodes = 512;
    int marked_count = 6;
    std::uint64_t seed = 1;
    std::optional<std::string> graph_path;  // load this graph instead of generating one
    std::vector<double> alphas;
    int t_max = 0;  // 0: ceil(t_max_factor * sqrt(N/M))
    double t_max_factor = 3.0;
    std::vector<Algorithm> algorithms = {Algorithm::quantum, Algorithm::semiclassical,
                                         Algorithm::randomized};
    ScaleFreeParams graph_params;
    StationaryOptions stationary;
    int threads = 0;  // 0 = hardware threads

    void validate() const;
};

struct AlphaSweepResult {
    std::vector<ResultRecord> records;  // alpha varies across records
    std::vector<std::tuple<Algorithm, double, ProbabilityCurve>> curves;
};

// One graph and marked set, swept over damping values.
AlphaSweepResult run_alpha_sweep(const AlphaSweepConfig& cfg);

struct KendallRecord {
    int n_nodes = 0;
    int marked_count = 0;
    int seed_index = 0;
    std::uint64_t cell_seed = 0;
    Algorithm algorithm = Algorithm::quantum;
    std::string reference;  // "classical" or "quantum"
    double tau = 0.0;
    bool defined = true;  // false: correlation undefined (tied list), excluded from means
    std::string error;
};

// Rank agreement of the marked nodes: each SearchRank distribution, measured
// at its first-maximum time, against the classical and quantum PageRank
// scores of the same nodes.
std::vector<KendallRecord> run_kendall_study(const SweepConfig& cfg);

struct KendallSummaryRow {
    int marked_count = 0;
    Algorithm algorithm = Algorithm::quantum;
    std::string reference;
    double mean_tau = 0.0;
    double std_tau = 0.0;
    int count = 0;
    int undefined_count = 0;
};

std::vector<KendallSummaryRow> summarize_kendall(const std::vector<KendallRecord>& records);

// results.csv round trip. Missing integer fields travel as empty cells.
void write_results_csv(const std::vector<ResultRecord>& records, const std::string& path);
std::vector<ResultRecord> read_results_csv(const std::string& path);

void write_kendall_csv(const std::vector<KendallRecord>& records, const std::string& path);

// Writes results.csv, summary.json (per-group aggregates plus power-law
// fits) and the per-figure plot CSVs (probability at maximum, optimal time,
// probability at reference time, all against N/M) under `out_dir`.
void emit_outputs(const std::vector<ResultRecord>& records, const SweepConfig& cfg,
                  const std::string& out_dir);

// Fits derived from sweep records; boundary-flagged maxima are censored
// observations and are excluded.
std::optional<FitResult> fit_optimal_time(const std::vector<ResultRecord>& records, Algorithm a);
std::optional<FitResult> fit_optimal_probability(const std::vector<ResultRecord>& records, Algorithm a,
                                                 double cutoff);
std::optional<FitResult> fit_reference_probability(const std::vector<ResultRecord>& records, Algorithm a,
                                                   double cutoff);

}  // namespace qsr

#include "qsr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qsr/csv.hpp"
#include "qsr/errors.hpp"
#include "qsr/parallel.hpp"
#include "qsr/rng.hpp"

namespace qsr {

namespace {

using nlohmann::json;

int t_max_for(double factor, int n_nodes, int marked_count) {
    return static_cast<int>(std::ceil(factor * std::sqrt(static_cast<double>(n_nodes) / marked_count)));
}

struct Cell {
    int n_nodes;
    int marked_count;
    int seed_index;
};

std::vector<Cell> grid_cells(const SweepConfig& cfg) {
    std::vector<Cell> cells;
    for (int n : cfg.sizes)
        for (int m : cfg.marked_counts)
            for (int s = 0; s < cfg.seeds_per_cell; ++s) cells.push_back({n, m, s});
    return cells;
}

// Graph and marked set of a cell; both derived from the cell seed so any
// study over the same (master, N, M, seed_index) sees the same instance.
struct CellInstance {
    std::uint64_t cell_seed;
    DirectedGraph graph;
    OracleSet oracle;
};

CellInstance make_cell_instance(const SweepConfig& cfg, const Cell& cell) {
    const std::uint64_t cell_seed =
        derive_seed({cfg.master_seed, static_cast<std::uint64_t>(cell.n_nodes),
                     static_cast<std::uint64_t>(cell.marked_count),
                     static_cast<std::uint64_t>(cell.seed_index)});
    DirectedGraph graph =
        generate_scale_free(cell.n_nodes, derive_seed({cell_seed, 0}), cfg.graph_params);
    Rng marked_rng(derive_seed({cell_seed, 1}));
    OracleSet oracle(sample_distinct(cell.n_nodes, cell.marked_count, marked_rng), cell.n_nodes);
    return {cell_seed, std::move(graph), std::move(oracle)};
}

int threads_per_cell(const SweepConfig& cfg) {
    if (cfg.threads_per_cell > 0) return cfg.threads_per_cell;
    return std::max(1, default_thread_count() / std::max(1, cfg.jobs));
}

ResultRecord base_record(const Cell& cell, std::uint64_t cell_seed, double alpha, Algorithm a) {
    ResultRecord rec;
    rec.n_nodes = cell.n_nodes;
    rec.marked_count = cell.marked_count;
    rec.seed_index = cell.seed_index;
    rec.cell_seed = cell_seed;
    rec.alpha = alpha;
    rec.algorithm = a;
    return rec;
}

// Peak, reference-time value and (for semiclassical) the classical step count
// at the peak, from one algorithm's curve.
void fill_from_curve(ResultRecord& rec, const AlgorithmCurves& curves, int t_ref) {
    const PeakResult peak = first_maximum(curves.curve);
    rec.t_star = peak.t_star;
    rec.p_star = peak.p_star;
    rec.boundary = peak.boundary;
    rec.t_ref = t_ref;
    rec.p_ref = curves.curve.at(t_ref);
    if (!curves.tc_star.empty())
        rec.tc_star = curves.tc_star[static_cast<std::size_t>(rec.t_star - 1)];
    rec.wall_seconds = curves.wall_seconds;
}

std::vector<ResultRecord> run_cell(const SweepConfig& cfg, const Cell& cell, int threads) {
    std::vector<ResultRecord> records;
    std::uint64_t cell_seed = 0;
    try {
        const CellInstance inst = make_cell_instance(cfg, cell);
        cell_seed = inst.cell_seed;
        const GoogleMatrix g = google_from_graph(inst.graph, cfg.alpha);
        const int t_max = t_max_for(cfg.t_max_factor, cell.n_nodes, cell.marked_count);
        const int t_ref = reference_time(cell.n_nodes, cell.marked_count);

        CurveOptions opts;
        opts.keep_distributions = false;
        opts.stationary = cfg.stationary;
        opts.threads = threads;
        const auto curves = searchrank_curves(g, inst.oracle, t_max, cfg.algorithms, opts);

        for (Algorithm a : cfg.algorithms) {
            ResultRecord rec = base_record(cell, cell_seed, cfg.alpha, a);
            fill_from_curve(rec, curves.at(a), t_ref);
            records.push_back(std::move(rec));
        }
    } catch (const std::exception& e) {
        records.clear();
        for (Algorithm a : cfg.algorithms) {
            ResultRecord rec = base_record(cell, cell_seed, cfg.alpha, a);
            rec.error = e.what();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

json fit_to_json(const FitResult& fit) {
    return json{{"A", fit.prefactor},
                {"n", fit.exponent},
                {"stderr_A", fit.stderr_prefactor},
                {"stderr_n", fit.stderr_exponent},
                {"cutoff", fit.cutoff},
                {"npoints", fit.npoints}};
}

std::vector<std::string> algorithm_names(const std::vector<Algorithm>& algorithms) {
    std::vector<std::string> names;
    for (Algorithm a : algorithms) names.push_back(to_string(a));
    return names;
}

}  // namespace

void SweepConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("sweep config: sizes must be nonempty");
    if (marked_counts.empty()) throw std::invalid_argument("sweep config: marked_counts must be nonempty");
    for (int n : sizes)
        if (n < 1) throw std::invalid_argument("sweep config: sizes must be >= 1");
    for (int n : sizes)
        for (int m : marked_counts)
            if (m < 1 || m > n)
                throw std::invalid_argument("sweep config: every marked count must satisfy 1 <= M <= N");
    if (seeds_per_cell < 1) throw std::invalid_argument("sweep config: seeds_per_cell must be >= 1");
    if (t_max_factor < 1.0) throw std::invalid_argument("sweep config: t_max_factor must be >= 1");
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("sweep config: alpha must be in [0, 1]");
    if (pagerank_alpha < 0.0 || pagerank_alpha > 1.0)
        throw std::invalid_argument("sweep config: pagerank_alpha must be in [0, 1]");
    if (algorithms.empty()) throw std::invalid_argument("sweep config: algorithms must be nonempty");
    if (jobs < 1) throw std::invalid_argument("sweep config: jobs must be >= 1");
    graph_params.validate();
}

std::string SweepConfig::to_json() const {
    json j;
    j["sizes"] = sizes;
    j["marked_counts"] = marked_counts;
    j["seeds_per_cell"] = seeds_per_cell;
    j["alpha"] = alpha;
    j["t_max_factor"] = t_max_factor;
    j["algorithms"] = algorithm_names(algorithms);
    j["master_seed"] = master_seed;
    j["graph_params"] = {{"a", graph_params.new_node_out},
                         {"b", graph_params.existing_edge},
                         {"g", graph_params.new_node_in},
                         {"delta_in", graph_params.delta_in},
                         {"delta_out", graph_params.delta_out}};
    j["stationary_tol"] = stationary.tol;
    j["stationary_max_steps"] = stationary.max_steps;
    j["asymptotic_ratio"] = asymptotic_ratio;
    j["pagerank_alpha"] = pagerank_alpha;
    j["pagerank_tol"] = pagerank.tol;
    j["quantum_pagerank_steps"] = quantum_pagerank_steps;
    j["jobs"] = jobs;
    j["threads_per_cell"] = threads_per_cell;
    return j.dump(2);
}

SweepConfig SweepConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("sweep config: invalid JSON: ") + e.what());
    }
    SweepConfig cfg;
    j.at("sizes").get_to(cfg.sizes);
    j.at("marked_counts").get_to(cfg.marked_counts);
    if (j.contains("seeds_per_cell")) cfg.seeds_per_cell = j["seeds_per_cell"].get<int>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("t_max_factor")) cfg.t_max_factor = j["t_max_factor"].get<double>();
    if (j.contains("algorithms")) {
        cfg.algorithms.clear();
        for (const auto& name : j["algorithms"]) cfg.algorithms.push_back(algorithm_from_string(name));
    }
    if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("graph_params")) {
        const auto& p = j["graph_params"];
        if (p.contains("a")) cfg.graph_params.new_node_out = p["a"].get<double>();
        if (p.contains("b")) cfg.graph_params.existing_edge = p["b"].get<double>();
        if (p.contains("g")) cfg.graph_params.new_node_in = p["g"].get<double>();
        if (p.contains("delta_in")) cfg.graph_params.delta_in = p["delta_in"].get<double>();
        if (p.contains("delta_out")) cfg.graph_params.delta_out = p["delta_out"].get<double>();
    }
    if (j.contains("stationary_tol")) cfg.stationary.tol = j["stationary_tol"].get<double>();
    if (j.contains("stationary_max_steps")) cfg.stationary.max_steps = j["stationary_max_steps"].get<int>();
    if (j.contains("asymptotic_ratio")) cfg.asymptotic_ratio = j["asymptotic_ratio"].get<double>();
    if (j.contains("pagerank_alpha")) cfg.pagerank_alpha = j["pagerank_alpha"].get<double>();
    if (j.contains("pagerank_tol")) cfg.pagerank.tol = j["pagerank_tol"].get<double>();
    if (j.contains("quantum_pagerank_steps"))
        cfg.quantum_pagerank_steps = j["quantum_pagerank_steps"].get<int>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("threads_per_cell")) cfg.threads_per_cell = j["threads_per_cell"].get<int>();
    cfg.validate();
    return cfg;
}

SweepConfig SweepConfig::from_json_file(const std::string& path) {
    return from_json_text(read_text_file(path));
}

std::vector<ResultRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<Cell> cells = grid_cells(cfg);
    const int cell_threads = threads_per_cell(cfg);

    std::vector<std::vector<ResultRecord>> per_cell(cells.size());
    parallel_for(0, static_cast<int>(cells.size()), cfg.jobs, [&](int i) {
        per_cell[static_cast<std::size_t>(i)] = run_cell(cfg, cells[static_cast<std::size_t>(i)], cell_threads);
    });

    std::vector<ResultRecord> records;
    for (auto& group : per_cell)
        for (auto& rec : group) records.push_back(std::move(rec));
    std::sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
        return std::tuple(a.n_nodes, a.marked_count, a.seed_index, to_string(a.algorithm)) <
               std::tuple(b.n_nodes, b.marked_count, b.seed_index, to_string(b.algorithm));
    });
    return records;
}

void AlphaSweepConfig::validate() const {
    if (n_nodes < 1) throw std::invalid_argument("alpha sweep: n_nodes must be >= 1");
    if (marked_count < 1 || marked_count > n_nodes)
        throw std::invalid_argument("alpha sweep: need 1 <= M <= N");
    if (alphas.empty()) throw std::invalid_argument("alpha sweep: alphas must be nonempty");
    for (double a : alphas)
        if (a < 0.0 || a > 1.0) throw std::invalid_argument("alpha sweep: alphas must lie in [0, 1]");
    if (t_max < 0) throw std::invalid_argument("alpha sweep: t_max must be >= 0");
    if (t_max == 0 && t_max_factor < 1.0)
        throw std::invalid_argument("alpha sweep: t_max_factor must be >= 1");
    if (algorithms.empty()) throw std::invalid_argument("alpha sweep: algorithms must be nonempty");
    graph_params.validate();
}

AlphaSweepResult run_alpha_sweep(const AlphaSweepConfig& cfg) {
    cfg.validate();
    DirectedGraph graph = cfg.graph_path ? load_edge_list(*cfg.graph_path)
                                         : generate_scale_free(cfg.n_nodes, derive_seed({cfg.seed, 0}),
                                                               cfg.graph_params);
    const int n = graph.node_count();
    if (cfg.marked_count > n) throw std::invalid_argument("alpha sweep: more marked nodes than nodes");
    Rng marked_rng(derive_seed({cfg.seed, 1}));
    const OracleSet oracle(sample_distinct(n, cfg.marked_count, marked_rng), n);

    const int t_max = cfg.t_max > 0 ? cfg.t_max : t_max_for(cfg.t_max_factor, n, cfg.marked_count);
    const int t_ref = reference_time(n, cfg.marked_count);
    const int threads = cfg.threads > 0 ? cfg.threads : default_thread_count();

    AlphaSweepResult result;
    const Cell cell{n, cfg.marked_count, 0};
    for (double alpha : cfg.alphas) {
        try {
            const GoogleMatrix g = google_from_graph(graph, alpha);
            CurveOptions opts;
            opts.keep_distributions = false;
            opts.stationary = cfg.stationary;
            opts.threads = threads;
            const auto curves = searchrank_curves(g, oracle, t_max, cfg.algorithms, opts);
            for (Algorithm a : cfg.algorithms) {
                ResultRecord rec = base_record(cell, cfg.seed, alpha, a);
                fill_from_curve(rec, curves.at(a), t_ref);
                result.records.push_back(std::move(rec));
                result.curves.emplace_back(a, alpha, curves.at(a).curve);
            }
        } catch (const std::exception& e) {
            for (Algorithm a : cfg.algorithms) {
                ResultRecord rec = base_record(cell, cfg.seed, alpha, a);
                rec.error = e.what();
                result.records.push_back(std::move(rec));
            }
        }
    }
    return result;
}

std::vector<KendallRecord> run_kendall_study(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<Cell> cells = grid_cells(cfg);
    const int cell_threads = threads_per_cell(cfg);

    std::vector<std::vector<KendallRecord>> per_cell(cells.size());
    parallel_for(0, static_cast<int>(cells.size()), cfg.jobs, [&](int idx) {
        const Cell& cell = cells[static_cast<std::size_t>(idx)];
        std::vector<KendallRecord>& records = per_cell[static_cast<std::size_t>(idx)];
        auto push_error = [&](const std::string& msg) {
            records.clear();
            for (Algorithm a : cfg.algorithms)
                for (const char* ref : {"classical", "quantum"}) {
                    KendallRecord rec;
                    rec.n_nodes = cell.n_nodes;
                    rec.marked_count = cell.marked_count;
                    rec.seed_index = cell.seed_index;
                    rec.algorithm = a;
                    rec.reference = ref;
                    rec.defined = false;
                    rec.error = msg;
                    records.push_back(std::move(rec));
                }
        };
        try {
            const CellInstance inst = make_cell_instance(cfg, cell);
            const auto& marked = inst.oracle.nodes();

            // PageRank references use their own damping value.
            const GoogleMatrix g_pr = google_from_graph(inst.graph, cfg.pagerank_alpha);
            const Distribution classical = classical_pagerank(g_pr, cfg.pagerank);
            const Distribution quantum = quantum_pagerank(g_pr, cfg.quantum_pagerank_steps);

            const GoogleMatrix g_sr = google_from_graph(inst.graph, cfg.alpha);
            const int t_max = t_max_for(cfg.t_max_factor, cell.n_nodes, cell.marked_count);
            CurveOptions opts;
            opts.keep_distributions = true;
            opts.stationary = cfg.stationary;
            opts.threads = cell_threads;
            const auto curves = searchrank_curves(g_sr, inst.oracle, t_max, cfg.algorithms, opts);

            auto scores_at = [&](const Distribution& dist) {
                std::vector<double> scores;
                scores.reserve(marked.size());
                for (int node : marked) scores.push_back(dist.p[static_cast<std::size_t>(node)]);
                return scores;
            };
            const std::vector<double> classical_scores = scores_at(classical);
            const std::vector<double> quantum_scores = scores_at(quantum);

            for (Algorithm a : cfg.algorithms) {
                const AlgorithmCurves& c = curves.at(a);
                // SearchRank scores are read at the first-maximum time.
                const PeakResult peak = first_maximum(c.curve);
                const Distribution& dist = c.distributions[static_cast<std::size_t>(peak.t_star - 1)];
                const std::vector<double> sr_scores = scores_at(dist);

                for (const char* ref : {"classical", "quantum"}) {
                    KendallRecord rec;
                    rec.n_nodes = cell.n_nodes;
                    rec.marked_count = cell.marked_count;
                    rec.seed_index = cell.seed_index;
                    rec.cell_seed = inst.cell_seed;
                    rec.algorithm = a;
                    rec.reference = ref;
                    try {
                        const auto& ref_scores =
                            std::string(ref) == "classical" ? classical_scores : quantum_scores;
                        rec.tau = kendall_tau(sr_scores, ref_scores).tau;
                    } catch (const std::domain_error&) {
                        rec.defined = false;
                    }
                    records.push_back(std::move(rec));
                }
            }
        } catch (const std::exception& e) {
            push_error(e.what());
        }
    });

    std::vector<KendallRecord> records;
    for (auto& group : per_cell)
        for (auto& rec : group) records.push_back(std::move(rec));
    std::sort(records.begin(), records.end(), [](const KendallRecord& a, const KendallRecord& b) {
        return std::tuple(a.n_nodes, a.marked_count, a.seed_index, to_string(a.algorithm), a.reference) <
               std::tuple(b.n_nodes, b.marked_count, b.seed_index, to_string(b.algorithm), b.reference);
    });
    return records;
}

std::vector<KendallSummaryRow> summarize_kendall(const std::vector<KendallRecord>& records) {
    std::map<std::tuple<int, std::string, std::string>, std::pair<std::vector<double>, int>> groups;
    for (const auto& rec : records) {
        auto& [taus, undefined] = groups[{rec.marked_count, to_string(rec.algorithm), rec.reference}];
        if (rec.defined && rec.error.empty())
            taus.push_back(rec.tau);
        else
            ++undefined;
    }
    std::vector<KendallSummaryRow> rows;
    for (const auto& [key, value] : groups) {
        KendallSummaryRow row;
        row.marked_count = std::get<0>(key);
        row.algorithm = algorithm_from_string(std::get<1>(key));
        row.reference = std::get<2>(key);
        row.mean_tau = mean(value.first);
        row.std_tau = stddev(value.first);
        row.count = static_cast<int>(value.first.size());
        row.undefined_count = value.second;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

const std::vector<std::string> kResultColumns = {
    "N",     "M",     "seed_index", "seed",  "alpha",   "algorithm", "t_star",
    "p_star", "boundary", "t_ref",  "p_ref", "tc_star", "wall_time", "error"};

std::string int_or_empty(int v) { return v < 0 ? std::string() : std::to_string(v); }

}  // namespace

void write_results_csv(const std::vector<ResultRecord>& records, const std::string& path) {
    CsvTable table;
    table.header = kResultColumns;
    for (const auto& r : records) {
        table.rows.push_back({std::to_string(r.n_nodes), std::to_string(r.marked_count),
                              std::to_string(r.seed_index), std::to_string(r.cell_seed),
                              format_double(r.alpha), to_string(r.algorithm), int_or_empty(r.t_star),
                              format_double(r.p_star), r.boundary ? "1" : "0", int_or_empty(r.t_ref),
                              format_double(r.p_ref), int_or_empty(r.tc_star),
                              format_double(r.wall_seconds), r.error});
    }
    write_csv(path, table);
}

std::vector<ResultRecord> read_results_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.header != kResultColumns) throw std::runtime_error(path + ": unexpected results.csv header");
    auto opt_int = [](const std::string& s) { return s.empty() ? -1 : static_cast<int>(parse_int(s)); };
    std::vector<ResultRecord> records;
    for (const auto& row : table.rows) {
        ResultRecord r;
        r.n_nodes = static_cast<int>(parse_int(row[0]));
        r.marked_count = static_cast<int>(parse_int(row[1]));
        r.seed_index = static_cast<int>(parse_int(row[2]));
        r.cell_seed = parse_u64(row[3]);
        r.alpha = parse_double(row[4]);
        r.algorithm = algorithm_from_string(row[5]);
        r.t_star = opt_int(row[6]);
        r.p_star = parse_double(row[7]);
        r.boundary = row[8] == "1";
        r.t_ref = opt_int(row[9]);
        r.p_ref = parse_double(row[10]);
        r.tc_star = opt_int(row[11]);
        r.wall_seconds = parse_double(row[12]);
        r.error = row[13];
        records.push_back(std::move(r));
    }
    return records;
}

void write_kendall_csv(const std::vector<KendallRecord>& records, const std::string& path) {
    CsvTable table;
    table.header = {"N", "M", "seed_index", "seed", "algorithm", "reference", "tau", "defined", "error"};
    for (const auto& r : records) {
        table.rows.push_back({std::to_string(r.n_nodes), std::to_string(r.marked_count),
                              std::to_string(r.seed_index), std::to_string(r.cell_seed),
                              to_string(r.algorithm), r.reference, format_double(r.tau),
                              r.defined ? "1" : "0", r.error});
    }
    write_csv(path, table);
}

namespace {

std::vector<std::pair<double, double>> fit_points(const std::vector<ResultRecord>& records, Algorithm a,
                                                  double value_of(const ResultRecord&)) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records)
        if (r.ok() && r.algorithm == a && !r.boundary) pts.emplace_back(r.ratio(), value_of(r));
    return pts;
}

std::optional<FitResult> try_fit(const std::vector<std::pair<double, double>>& pts, double cutoff) {
    try {
        return fit_power_law(pts, cutoff);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<FitResult> fit_optimal_time(const std::vector<ResultRecord>& records, Algorithm a) {
    return try_fit(fit_points(records, a, [](const ResultRecord& r) { return static_cast<double>(r.t_star); }),
                   0.0);
}

std::optional<FitResult> fit_optimal_probability(const std::vector<ResultRecord>& records, Algorithm a,
                                                 double cutoff) {
    return try_fit(fit_points(records, a, [](const ResultRecord& r) { return r.p_star; }), cutoff);
}

std::optional<FitResult> fit_reference_probability(const std::vector<ResultRecord>& records, Algorithm a,
                                                   double cutoff) {
    return try_fit(fit_points(records, a, [](const ResultRecord& r) { return r.p_ref; }), cutoff);
}

void emit_outputs(const std::vector<ResultRecord>& records, const SweepConfig& cfg,
                  const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const auto path = [&](const char* name) { return (fs::path(out_dir) / name).string(); };

    write_results_csv(records, path("results.csv"));

    // Per-figure plot data: x is always N/M.
    auto write_plot = [&](const char* name, const char* value_column,
                          double value_of(const ResultRecord&)) {
        CsvTable table;
        table.header = {"algorithm", "N", "M", "ratio", "seed_index", value_column};
        for (const auto& r : records) {
            if (!r.ok()) continue;
            table.rows.push_back({to_string(r.algorithm), std::to_string(r.n_nodes),
                                  std::to_string(r.marked_count), format_double(r.ratio()),
                                  std::to_string(r.seed_index), format_double(value_of(r))});
        }
        write_csv(path(name), table);
    };
    write_plot("maxima_probability.csv", "p_star", [](const ResultRecord& r) { return r.p_star; });
    write_plot("optimal_time.csv", "t_star",
               [](const ResultRecord& r) { return static_cast<double>(r.t_star); });
    write_plot("reference_probability.csv", "p_ref", [](const ResultRecord& r) { return r.p_ref; });

    json summary;
    summary["config"] = json::parse(cfg.to_json());
    int errors = 0;
    for (const auto& r : records)
        if (!r.ok()) ++errors;
    summary["records"] = {{"total", records.size()}, {"errors", errors}};

    // Aggregates per (algorithm, N, M).
    std::map<std::tuple<std::string, int, int>,
             std::tuple<std::vector<double>, std::vector<double>, std::vector<double>>>
        groups;
    for (const auto& r : records) {
        if (!r.ok()) continue;
        auto& [p_stars, p_refs, t_stars] = groups[{to_string(r.algorithm), r.n_nodes, r.marked_count}];
        p_stars.push_back(r.p_star);
        p_refs.push_back(r.p_ref);
        t_stars.push_back(static_cast<double>(r.t_star));
    }
    summary["groups"] = json::array();
    for (const auto& [key, vals] : groups) {
        const auto& [p_stars, p_refs, t_stars] = vals;
        summary["groups"].push_back({{"algorithm", std::get<0>(key)},
                                     {"N", std::get<1>(key)},
                                     {"M", std::get<2>(key)},
                                     {"ratio", static_cast<double>(std::get<1>(key)) / std::get<2>(key)},
                                     {"count", p_stars.size()},
                                     {"mean_p_star", mean(p_stars)},
                                     {"std_p_star", stddev(p_stars)},
                                     {"mean_p_ref", mean(p_refs)},
                                     {"std_p_ref", stddev(p_refs)},
                                     {"mean_t_star", mean(t_stars)}});
    }

    // Mean probabilities per (algorithm, M) in the asymptotic region.
    std::map<std::tuple<std::string, int>, std::pair<std::vector<double>, std::vector<double>>> asym;
    for (const auto& r : records) {
        if (!r.ok() || r.ratio() < cfg.asymptotic_ratio) continue;
        auto& [p_stars, p_refs] = asym[{to_string(r.algorithm), r.marked_count}];
        p_stars.push_back(r.p_star);
        p_refs.push_back(r.p_ref);
    }
    summary["asymptotic"] = json::array();
    for (const auto& [key, vals] : asym) {
        summary["asymptotic"].push_back({{"algorithm", std::get<0>(key)},
                                         {"M", std::get<1>(key)},
                                         {"count", vals.first.size()},
                                         {"mean_p_star", mean(vals.first)},
                                         {"std_p_star", stddev(vals.first)},
                                         {"mean_p_ref", mean(vals.second)},
                                         {"std_p_ref", stddev(vals.second)}});
    }

    summary["fits"] = json::object();
    for (Algorithm a : cfg.algorithms) {
        const std::string name = to_string(a);
        if (auto fit = fit_optimal_time(records, a)) summary["fits"]["optimal_time"][name] = fit_to_json(*fit);
        if (auto fit = fit_optimal_probability(records, a, cfg.asymptotic_ratio))
            summary["fits"]["optimal_probability"][name] = fit_to_json(*fit);
        if (auto fit = fit_reference_probability(records, a, cfg.asymptotic_ratio))
            summary["fits"]["reference_probability"][name] = fit_to_json(*fit);
    }

    write_text_file(path("summary.json"), summary.dump(2) + "\n");
}

}  // namespace qsr

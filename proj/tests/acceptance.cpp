// Acceptance suite: every release gate in one binary, one PASS/FAIL line
// per criterion. Exit code is the number of failed criteria.
//
//   1  flattened-operator equivalence on small graphs
//   2  unitarity and stochasticity margins
//   3  complete-mixing search probability
//   4  quantum probability depletion exponent
//   5  semiclassical / randomized probability retention
//   6  optimal-time scaling for all three algorithms
//   7  Kendall agreement with the PageRank references
//   8  32-node showcase ranking
//   9  step-time and memory scaling of the walk kernel
//  10  analytical PageRank fixed points
//
// Criteria 4-6 share one grid sweep; expect some minutes of wall time on a
// single core.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "qsr/analysis.hpp"
#include "qsr/harness.hpp"
#include "qsr/ranks.hpp"
#include "qsr/rng.hpp"
#include "qsr/szegedy.hpp"

using namespace qsr;

// ---------------------------------------------------------------------------
// Heap accounting for the memory-scaling criterion: a counting global
// allocator records the high-water mark of live bytes.

namespace {

std::atomic<long long> g_live_bytes{0};
std::atomic<long long> g_peak_bytes{0};

void note_alloc(std::size_t size) {
    const long long live =
        g_live_bytes.fetch_add(static_cast<long long>(size)) + static_cast<long long>(size);
    long long peak = g_peak_bytes.load();
    while (live > peak && !g_peak_bytes.compare_exchange_weak(peak, live)) {
    }
}

void note_free(std::size_t size) { g_live_bytes.fetch_sub(static_cast<long long>(size)); }

void reset_peak() { g_peak_bytes.store(g_live_bytes.load()); }

long long peak_above(long long baseline) { return g_peak_bytes.load() - baseline; }

}  // namespace

void* operator new(std::size_t size) {
    void* p = std::malloc(size + 16);
    if (!p) throw std::bad_alloc();
    *static_cast<std::size_t*>(p) = size;
    note_alloc(size);
    return static_cast<char*>(p) + 16;
}

void operator delete(void* p) noexcept {
    if (!p) return;
    void* base = static_cast<char*>(p) - 16;
    note_free(*static_cast<std::size_t*>(base));
    std::free(base);
}

void operator delete(void* p, std::size_t) noexcept { operator delete(p); }

// ---------------------------------------------------------------------------

namespace {

struct Criterion {
    int id;
    bool passed;
};

std::vector<Criterion> g_results;

void report(int id, const std::string& label, bool passed, const std::string& detail) {
    g_results.push_back({id, passed});
    std::printf("[%s] %2d. %s: %s\n", passed ? "PASS" : "FAIL", id, label.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

int sweep_t_max(double factor, int n_nodes, int marked_count) {
    return static_cast<int>(std::ceil(factor * std::sqrt(static_cast<double>(n_nodes) / marked_count)));
}

// --------------------------- criterion 1 ----------------------------------

void criterion_brute_force() {
    Rng rng(1001);
    double worst = 0.0;
    int instances = 0;
    const double alphas[] = {0.0, 0.25, 0.85};
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(6));  // 3..8
        const double alpha = alphas[trial % 3];
        const int oracle_size = static_cast<int>(rng.next_below(3));  // 0..2
        const GoogleMatrix g = google_from_graph(generate_scale_free(n, rng.next_u64()), alpha);
        Rng pick(rng.next_u64());
        const OracleSet oracle(sample_distinct(n, oracle_size, pick), n);
        const SqrtColumns sq = build_sqrt_columns(g);
        ++instances;

        // Walk evolution, flattened vs kernel, four steps.
        const auto step_op = qsr::testing::flat_step(g, oracle);
        WalkState state = initial_superposition(sq);
        auto flat = qsr::testing::flatten(state);
        for (int t = 0; t < 4; ++t) {
            state = step_walk(std::move(state), sq, oracle);
            flat = qsr::testing::flat_apply(step_op, flat);
            worst = std::max(worst, qsr::testing::max_abs_diff(qsr::testing::flatten(state), flat));
        }

        // Search marginals per step.
        if (!oracle.empty()) {
            const SearchCurveResult curve = quantum_searchrank_curve(g, oracle, 4, true);
            auto flat2 = qsr::testing::flatten(initial_superposition(sq));
            for (int t = 1; t <= 4; ++t) {
                flat2 = qsr::testing::flat_apply(step_op, flat2);
                const auto expect = qsr::testing::flat_marginal_register2(n, flat2);
                const Distribution& got = curve.marginals[static_cast<std::size_t>(t - 1)];
                for (int j = 0; j < n; ++j)
                    worst = std::max(worst, std::abs(got.p[static_cast<std::size_t>(j)] -
                                                     expect[static_cast<std::size_t>(j)]));
            }
        }

        // Semiclassical matrices.
        for (int tq : {1, 2}) {
            const SemiclassicalMatrix m = semiclassical_matrix(g, oracle, tq);
            const DenseMatrix expect = qsr::testing::flat_semiclassical_matrix(g, oracle, tq);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) worst = std::max(worst, std::abs(m.m(r, c) - expect(r, c)));
        }
    }
    report(1, "flattened-operator equivalence (n <= 8)", worst < 1e-10,
           "max deviation " + fmt(worst) + " over " + std::to_string(instances) + " instances");
}

// --------------------------- criterion 2 ----------------------------------

void criterion_unitarity_stochasticity() {
    Rng rng(2002);
    const int n = 16;
    const GoogleMatrix g = google_from_graph(generate_scale_free(n, 77), 0.25);
    const SqrtColumns sq = build_sqrt_columns(g);
    const OracleSet oracle({2, 9}, n);

    WalkState state = initial_superposition(sq);
    double worst_norm = 0.0;
    for (int i = 0; i < 1000; ++i) {
        switch (rng.next_below(3)) {
            case 0: state = apply_reflection(std::move(state), sq); break;
            case 1: state = apply_swap(std::move(state)); break;
            default: state = apply_oracle(std::move(state), oracle); break;
        }
        worst_norm = std::max(worst_norm, std::abs(state.norm() - 1.0));
    }

    double worst_column = 0.0;
    for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
        for (double alpha : {0.0, 0.25, 0.85}) {
            const GoogleMatrix gm = google_from_graph(generate_scale_free(12, seed), alpha);
            for (int c = 0; c < gm.n(); ++c)
                worst_column = std::max(worst_column, std::abs(gm.m.column_sum(c) - 1.0));
            Rng pick(seed);
            const OracleSet marks(sample_distinct(12, 2, pick), 12);
            for (int tq : {1, 3}) {
                const SemiclassicalMatrix m = semiclassical_matrix(gm, marks, tq);
                worst_column = std::max(worst_column, m.max_column_sum_error());
            }
        }
    }

    const bool ok = worst_norm < 1e-9 && worst_column < 1e-10;
    report(2, "unitarity and stochasticity margins", ok,
           "norm drift " + fmt(worst_norm) + " over 1000 applications, column-sum error " +
               fmt(worst_column));
}

// --------------------------- criterion 3 ----------------------------------

void criterion_complete_mixing() {
    const GoogleMatrix g = google_from_graph(generate_scale_free(64, 33), 0.0);
    Rng pick(3003);
    const OracleSet oracle(sample_distinct(64, 6, pick), 64);
    const int t_max = sweep_t_max(3.0, 64, 6);

    const auto curves = searchrank_curves(
        g, oracle, t_max, {Algorithm::quantum, Algorithm::semiclassical, Algorithm::randomized}, {});
    double lowest = 1.0;
    std::ostringstream detail;
    for (const auto& [algorithm, c] : curves) {
        const double peak = first_maximum(c.curve).p_star;
        lowest = std::min(lowest, peak);
        detail << to_string(algorithm) << "=" << fmt(peak) << " ";
    }
    report(3, "complete-mixing search reaches ~1 (N=64, M=6, alpha=0)", lowest >= 0.99,
           "peaks: " + detail.str());
}

// --------------------------- criteria 4-6 ----------------------------------

SweepConfig acceptance_sweep_config() {
    SweepConfig cfg;
    cfg.sizes = {64, 128, 256, 512};
    cfg.marked_counts = {1, 3, 6, 12, 24, 48};
    cfg.seeds_per_cell = 3;
    cfg.alpha = 0.25;
    cfg.master_seed = 2025;
    return cfg;
}

void criteria_sweep() {
    const SweepConfig cfg = acceptance_sweep_config();
    const std::vector<ResultRecord> records = run_sweep(cfg);

    int errors = 0;
    for (const auto& r : records)
        if (!r.ok()) ++errors;

    // 4: quantum probability depletion.
    {
        const auto fit = fit_optimal_probability(records, Algorithm::quantum, 20.0);
        const bool ok = fit && errors == 0 && fit->exponent >= -1.35 && fit->exponent <= -0.80;
        report(4, "quantum probability depletion exponent in [-1.35, -0.80]", ok,
               fit ? "n = " + fmt(fit->exponent) + " +- " + fmt(fit->stderr_exponent) + ", A = " +
                         fmt(fit->prefactor) + ", " + std::to_string(fit->npoints) + " points, " +
                         std::to_string(errors) + " error cells"
                   : "fit unavailable");
    }

    // 5: semiclassical / randomized probability retention at the reference time.
    {
        double sc_sum = 0.0, rz_sum = 0.0;
        int sc_count = 0, rz_count = 0;
        for (const auto& r : records) {
            if (!r.ok() || r.ratio() < 20.0) continue;
            if (r.algorithm == Algorithm::semiclassical) {
                sc_sum += r.p_ref;
                ++sc_count;
            } else if (r.algorithm == Algorithm::randomized) {
                rz_sum += r.p_ref;
                ++rz_count;
            }
        }
        const double sc_mean = sc_count ? sc_sum / sc_count : 0.0;
        const double rz_mean = rz_count ? rz_sum / rz_count : 0.0;
        const bool ok = sc_count >= 10 && rz_count >= 10 && sc_mean >= 0.85 && rz_mean >= 0.80;
        report(5, "probability retention at the reference time (N/M >= 20)", ok,
               "semiclassical mean " + fmt(sc_mean) + " (" + std::to_string(sc_count) +
                   " cells), randomized mean " + fmt(rz_mean) + " (" + std::to_string(rz_count) +
                   " cells)");
    }

    // 6: optimal-time scaling for all three algorithms.
    {
        bool ok = true;
        std::ostringstream detail;
        for (Algorithm a : {Algorithm::quantum, Algorithm::semiclassical, Algorithm::randomized}) {
            const auto fit = fit_optimal_time(records, a);
            if (!fit) {
                ok = false;
                detail << to_string(a) << "=unavailable ";
                continue;
            }
            const bool in_band = fit->exponent >= 0.40 && fit->exponent <= 0.60 &&
                                 fit->prefactor >= 0.7 && fit->prefactor <= 1.5;
            ok = ok && in_band;
            detail << to_string(a) << ": n=" << fmt(fit->exponent) << " A=" << fmt(fit->prefactor)
                   << "  ";
        }
        report(6, "optimal-time exponents in [0.40, 0.60], prefactors in [0.7, 1.5]", ok, detail.str());
    }
}

// --------------------------- criterion 7 ----------------------------------

void criterion_kendall() {
    SweepConfig cfg = acceptance_sweep_config();
    cfg.marked_counts = {48};
    const auto records = run_kendall_study(cfg);

    double sums[2] = {0.0, 0.0};
    int counts[2] = {0, 0};
    std::map<int, std::pair<double, int>> quantum_by_size;
    for (const auto& r : records) {
        if (!r.defined || !r.error.empty()) continue;
        const int bucket = r.reference == "classical" ? 0 : 1;
        sums[bucket] += r.tau;
        ++counts[bucket];
        if (bucket == 1) {
            quantum_by_size[r.n_nodes].first += r.tau;
            ++quantum_by_size[r.n_nodes].second;
        }
    }
    const double mean_classical = counts[0] ? sums[0] / counts[0] : -2.0;
    const double mean_quantum = counts[1] ? sums[1] / counts[1] : -2.0;
    const bool ok = counts[0] >= 9 && counts[1] >= 9 && mean_classical >= 0.45 &&
                    mean_classical <= 0.75 && mean_quantum >= 0.0 && mean_quantum <= 0.3;
    std::ostringstream detail;
    detail << "mean tau vs classical " << fmt(mean_classical) << ", vs quantum " << fmt(mean_quantum)
           << " (" << counts[0] << "+" << counts[1] << " records; vs-quantum per N:";
    for (const auto& [n, acc] : quantum_by_size) detail << " " << n << "=" << fmt(acc.first / acc.second);
    detail << ")";
    report(7, "Kendall agreement (M=48): classical in [0.45, 0.75], quantum in [0.0, 0.3]", ok,
           detail.str());
}

// --------------------------- criterion 8 ----------------------------------

void criterion_showcase() {
    const DirectedGraph graph = generate_scale_free(32, 2025);
    const GoogleMatrix g_pr = google_from_graph(graph, 0.85);
    const Distribution classical = classical_pagerank(g_pr);
    const Distribution quantum_pr = quantum_pagerank(g_pr, 1000);

    // One marked node per importance tier of the classical ranking.
    std::vector<int> order(32);
    for (int i = 0; i < 32; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return classical.p[static_cast<std::size_t>(a)] > classical.p[static_cast<std::size_t>(b)];
    });
    std::vector<int> marked{order[0], order[10], order[20], order[30]};
    const OracleSet oracle(marked, 32);

    const GoogleMatrix g_sr = google_from_graph(graph, 0.25);
    CurveOptions opts;
    opts.keep_distributions = true;
    const auto curves = searchrank_curves(
        g_sr, oracle, 9, {Algorithm::quantum, Algorithm::semiclassical, Algorithm::randomized}, opts);

    const double classical_mass = marked_mass(classical, oracle);
    const double quantum_mass = marked_mass(quantum_pr, oracle);

    bool ok = true;
    std::ostringstream detail;
    detail << "PageRank masses " << fmt(classical_mass) << "/" << fmt(quantum_mass) << "; ";
    for (const auto& [algorithm, c] : curves) {
        const PeakResult peak = first_maximum(c.curve);
        const Distribution& dist = c.distributions[static_cast<std::size_t>(peak.t_star - 1)];

        std::vector<int> top(32);
        for (int i = 0; i < 32; ++i) top[static_cast<std::size_t>(i)] = i;
        std::sort(top.begin(), top.end(), [&](int a, int b) {
            return dist.p[static_cast<std::size_t>(a)] > dist.p[static_cast<std::size_t>(b)];
        });
        std::vector<int> top4(top.begin(), top.begin() + 4);
        std::sort(top4.begin(), top4.end());
        std::vector<int> expect = marked;
        std::sort(expect.begin(), expect.end());

        const double mass = marked_mass(dist, oracle);
        const bool top_ok = top4 == expect;
        const bool mass_ok = mass > classical_mass && mass > quantum_mass;
        ok = ok && top_ok && mass_ok;
        detail << to_string(algorithm) << " mass " << fmt(mass) << (top_ok ? " top4" : " NOT-top4")
               << "; ";
    }
    report(8, "32-node showcase: marked nodes become the global top-4", ok, detail.str());
}

// --------------------------- criterion 9 ----------------------------------

void criterion_performance() {
    const std::vector<int> sizes{128, 256, 512, 1024};
    std::vector<std::pair<double, double>> time_points;
    std::vector<double> bytes_per_n2;
    std::ostringstream detail;

    for (const int n : sizes) {
        const GoogleMatrix g = google_from_graph(generate_scale_free(n, 9090), 0.25);
        Rng pick(static_cast<std::uint64_t>(n));
        const OracleSet oracle(sample_distinct(n, 4, pick), n);

        reset_peak();
        const long long baseline = g_peak_bytes.load();
        const SqrtColumns sq = build_sqrt_columns(g);
        WalkState state = initial_superposition(sq);

        const int reps = std::max(4, 131072 / n);
        state = step_walk(std::move(state), sq, oracle);  // warm up
        const auto start = std::chrono::steady_clock::now();
        for (int r = 0; r < reps; ++r) state = step_walk(std::move(state), sq, oracle);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;

        const long long walk_bytes = peak_above(baseline);
        time_points.emplace_back(static_cast<double>(n), seconds);
        bytes_per_n2.push_back(static_cast<double>(walk_bytes) / (static_cast<double>(n) * n));
        detail << "N=" << n << ": " << fmt(seconds * 1e3) << " ms/step, "
               << fmt(static_cast<double>(walk_bytes) / (1 << 20)) << " MiB; ";
    }

    const FitResult fit = fit_power_law(time_points);
    const double ratio = *std::max_element(bytes_per_n2.begin(), bytes_per_n2.end()) /
                         *std::min_element(bytes_per_n2.begin(), bytes_per_n2.end());
    const bool ok = fit.exponent >= 1.7 && fit.exponent <= 2.3 && ratio <= 1.5;
    report(9, "step time ~ N^2 (slope 2.0 +- 0.3), walk memory ~ N^2 (within 1.5x)", ok,
           "slope " + fmt(fit.exponent) + ", bytes/N^2 spread x" + fmt(ratio) + "; " + detail.str());
}

// --------------------------- criterion 10 ---------------------------------

void criterion_fixed_points() {
    const GoogleMatrix chain = google_from_graph(DirectedGraph(2, {{0, 1}}), 0.85);
    const Distribution p = classical_pagerank(chain);
    const double err2 = std::max(std::abs(p.p[0] - 20.0 / 57.0), std::abs(p.p[1] - 37.0 / 57.0));

    const GoogleMatrix mixing = google_from_graph(generate_scale_free(24, 4), 0.0);
    const Distribution u = classical_pagerank(mixing);
    double err_uniform = 0.0;
    for (double v : u.p) err_uniform = std::max(err_uniform, std::abs(v - 1.0 / 24.0));

    const bool ok = err2 <= 1e-9 && err_uniform <= 1e-12;
    report(10, "analytical PageRank fixed points", ok,
           "2-node error " + fmt(err2) + ", alpha=0 uniformity error " + fmt(err_uniform));
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == std::string("--only")) only = std::atoi(argv[2]);

    const auto wants = [&](int id) { return only == 0 || only == id; };

    if (wants(1)) criterion_brute_force();
    if (wants(2)) criterion_unitarity_stochasticity();
    if (wants(3)) criterion_complete_mixing();
    if (wants(4) || wants(5) || wants(6)) criteria_sweep();
    if (wants(7)) criterion_kendall();
    if (wants(8)) criterion_showcase();
    if (wants(9)) criterion_performance();
    if (wants(10)) criterion_fixed_points();

    int failed = 0;
    for (const auto& c : g_results)
        if (!c.passed) ++failed;
    std::printf("RESULT: %zu/%zu criteria passed\n", g_results.size() - static_cast<std::size_t>(failed),
                g_results.size());
    return failed;
}

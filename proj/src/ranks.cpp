#include "qsr/ranks.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsr/csv.hpp"
#include "qsr/errors.hpp"
#include "qsr/parallel.hpp"

namespace qsr {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

WalkState advance(WalkState s, const SqrtColumns& sq, const OracleSet& oracle, WalkOperator op) {
    return op == WalkOperator::search ? step_walk(std::move(s), sq, oracle)
                                      : half_step_walk(std::move(s), sq, oracle);
}

}  // namespace

double ProbabilityCurve::at(int tq) const {
    for (const auto& pt : points)
        if (pt.tq == tq) return pt.p;
    throw std::invalid_argument("ProbabilityCurve: no point at tq=" + std::to_string(tq));
}

double SemiclassicalMatrix::max_column_sum_error() const {
    double worst = 0.0;
    for (int c = 0; c < n(); ++c) worst = std::max(worst, std::abs(m.column_sum(c) - 1.0));
    return worst;
}

QuantumPagerankResult quantum_pagerank(const GoogleMatrix& g, const QuantumPagerankOptions& opts) {
    if (opts.steps < 1) throw std::invalid_argument("quantum_pagerank: steps must be >= 1");
    const int n = g.n();
    const SqrtColumns sq = build_sqrt_columns(g);
    const OracleSet no_oracle;

    WalkState state = initial_superposition(sq);
    std::vector<double> sum(static_cast<std::size_t>(n), 0.0);
    auto accumulate = [&](const Distribution& d) {
        for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] += d.p[static_cast<std::size_t>(i)];
    };

    accumulate(marginal_register2(state));
    Distribution window_avg;  // running average snapshot, refreshed every adaptive_window steps
    int t = 0;
    for (; t < opts.steps; ++t) {
        state = step_walk(std::move(state), sq, no_oracle);
        accumulate(marginal_register2(state));
        if (opts.adaptive && (t + 1) % opts.adaptive_window == 0) {
            Distribution avg(sum);
            avg.normalize();
            if (window_avg.n() == n && l1_distance(avg, window_avg) < opts.adaptive_tol) {
                ++t;
                break;
            }
            window_avg = std::move(avg);
        }
    }
    Distribution result(std::move(sum));
    result.normalize();
    return {std::move(result), t};
}

Distribution quantum_pagerank(const GoogleMatrix& g, int steps) {
    QuantumPagerankOptions opts;
    opts.steps = steps;
    return quantum_pagerank(g, opts).dist;
}

SearchCurveResult quantum_searchrank_curve(const GoogleMatrix& g, const OracleSet& oracle, int t_max,
                                           bool keep_distributions) {
    if (oracle.empty())
        throw std::invalid_argument("quantum_searchrank_curve: oracle must be nonempty (use quantum_pagerank)");
    if (t_max < 1) throw std::invalid_argument("quantum_searchrank_curve: t_max must be >= 1");

    const SqrtColumns sq = build_sqrt_columns(g);
    WalkState state = initial_superposition(sq);

    SearchCurveResult result;
    result.marginal_t0 = marginal_register2(state);
    result.curve.points.reserve(static_cast<std::size_t>(t_max));
    for (int t = 1; t <= t_max; ++t) {
        state = step_walk(std::move(state), sq, oracle);
        Distribution marginal = marginal_register2(state);
        result.curve.points.push_back({t, marked_mass(marginal, oracle)});
        if (keep_distributions) result.marginals.push_back(std::move(marginal));
    }
    return result;
}

SemiclassicalMatrix semiclassical_matrix(const GoogleMatrix& g, const OracleSet& oracle, int tq,
                                         WalkOperator op, int threads) {
    if (tq < 0) throw std::invalid_argument("semiclassical_matrix: tq must be >= 0");
    const int n = g.n();
    SemiclassicalMatrix out;
    out.tq = tq;
    out.m = DenseMatrix(n);
    if (tq == 0) {
        // Unevolved proxy states reproduce the Google matrix itself.
        out.m = g.m;
        return out;
    }
    const SqrtColumns sq = build_sqrt_columns(g);
    parallel_for(0, n, threads, [&](int i) {
        WalkState state = psi_state(sq, i);
        for (int t = 0; t < tq; ++t) state = advance(std::move(state), sq, oracle, op);
        const Distribution marginal = marginal_register2(state);
        for (int j = 0; j < n; ++j) out.m(j, i) = marginal.p[static_cast<std::size_t>(j)];
    });
    return out;
}

std::vector<SemiclassicalMatrix> semiclassical_family(const GoogleMatrix& g, const OracleSet& oracle,
                                                      int t_max, int threads) {
    if (t_max < 1) throw std::invalid_argument("semiclassical_family: t_max must be >= 1");
    const int n = g.n();
    const SqrtColumns sq = build_sqrt_columns(g);

    std::vector<SemiclassicalMatrix> family(static_cast<std::size_t>(t_max));
    for (int t = 1; t <= t_max; ++t) {
        family[static_cast<std::size_t>(t - 1)].tq = t;
        family[static_cast<std::size_t>(t - 1)].m = DenseMatrix(n);
    }
    // One evolution per start node fills column i of every matrix.
    parallel_for(0, n, threads, [&](int i) {
        WalkState state = psi_state(sq, i);
        for (int t = 1; t <= t_max; ++t) {
            state = step_walk(std::move(state), sq, oracle);
            DenseMatrix& m = family[static_cast<std::size_t>(t - 1)].m;
            const Distribution marginal = marginal_register2(state);
            for (int j = 0; j < n; ++j) m(j, i) = marginal.p[static_cast<std::size_t>(j)];
        }
    });
    return family;
}

SemiclassicalResult stationary_distribution(const SemiclassicalMatrix& m, const StationaryOptions& opts,
                                            std::optional<Distribution> initial) {
    const int n = m.n();
    if (opts.tol <= 0.0) throw std::invalid_argument("stationary_distribution: tol must be positive");
    Distribution p = initial ? std::move(*initial) : Distribution::uniform(n);
    if (p.n() != n) throw std::invalid_argument("stationary_distribution: dimension mismatch");

    SemiclassicalResult result;
    if (opts.keep_trajectory) result.trajectory.push_back(p);

    std::vector<double> next;
    double residual = 0.0;
    // tc_star counts the classical steps taken before the iterate stopped
    // moving: an already-stationary initial distribution reports 0.
    for (int step = 0; step <= opts.max_steps; ++step) {
        m.m.multiply(p.p, next);
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual += std::abs(next[static_cast<std::size_t>(i)] - p.p[static_cast<std::size_t>(i)]);
        if (residual <= opts.tol) {
            result.dist = std::move(p);
            result.tc_star = step;
            result.residual = residual;
            return result;
        }
        p.p = next;
        p.normalize();
        if (opts.keep_trajectory) result.trajectory.push_back(p);
    }
    throw ConvergenceError("semiclassical walk did not converge", residual, opts.max_steps);
}

SemiclassicalResult semiclassical_searchrank(const GoogleMatrix& g, const OracleSet& oracle, int tq,
                                             const StationaryOptions& opts,
                                             std::optional<Distribution> initial, int threads) {
    if (tq < 1) throw std::invalid_argument("semiclassical_searchrank: tq must be >= 1");
    const SemiclassicalMatrix m = semiclassical_matrix(g, oracle, tq, WalkOperator::search, threads);
    return stationary_distribution(m, opts, std::move(initial));
}

Distribution randomized_searchrank(const GoogleMatrix& g, const OracleSet& oracle, int tq, int threads) {
    if (tq < 1) throw std::invalid_argument("randomized_searchrank: tq must be >= 1");
    const SemiclassicalMatrix m = semiclassical_matrix(g, oracle, tq, WalkOperator::search, threads);
    std::vector<double> out;
    m.m.multiply(Distribution::uniform(m.n()).p, out);
    return Distribution(std::move(out));
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::quantum: return "quantum";
        case Algorithm::semiclassical: return "semiclassical";
        case Algorithm::randomized: return "randomized";
    }
    throw std::logic_error("unknown algorithm");
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "quantum") return Algorithm::quantum;
    if (name == "semiclassical") return Algorithm::semiclassical;
    if (name == "randomized") return Algorithm::randomized;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::map<Algorithm, AlgorithmCurves> searchrank_curves(const GoogleMatrix& g, const OracleSet& oracle,
                                                       int t_max, const std::vector<Algorithm>& which,
                                                       const CurveOptions& opts) {
    if (t_max < 1) throw std::invalid_argument("searchrank_curves: t_max must be >= 1");
    std::map<Algorithm, AlgorithmCurves> out;
    bool want_quantum = false, want_semiclassical = false, want_randomized = false;
    for (Algorithm a : which) {
        out[a] = AlgorithmCurves{};
        if (a == Algorithm::quantum) want_quantum = true;
        if (a == Algorithm::semiclassical) want_semiclassical = true;
        if (a == Algorithm::randomized) want_randomized = true;
    }

    if (want_quantum) {
        const auto start = std::chrono::steady_clock::now();
        SearchCurveResult q = quantum_searchrank_curve(g, oracle, t_max, opts.keep_distributions);
        AlgorithmCurves& c = out[Algorithm::quantum];
        c.curve = std::move(q.curve);
        c.distributions = std::move(q.marginals);
        c.wall_seconds = seconds_since(start);
    }

    if (want_semiclassical || want_randomized) {
        const auto family_start = std::chrono::steady_clock::now();
        const std::vector<SemiclassicalMatrix> family = semiclassical_family(g, oracle, t_max, opts.threads);
        const double family_seconds = seconds_since(family_start);
        const Distribution uniform = Distribution::uniform(g.n());

        if (want_randomized) {
            const auto start = std::chrono::steady_clock::now();
            AlgorithmCurves& c = out[Algorithm::randomized];
            for (const auto& m : family) {
                std::vector<double> p;
                m.m.multiply(uniform.p, p);
                Distribution dist(std::move(p));
                c.curve.points.push_back({m.tq, marked_mass(dist, oracle)});
                if (opts.keep_distributions) c.distributions.push_back(std::move(dist));
            }
            c.wall_seconds = family_seconds + seconds_since(start);
        }
        if (want_semiclassical) {
            const auto start = std::chrono::steady_clock::now();
            AlgorithmCurves& c = out[Algorithm::semiclassical];
            for (const auto& m : family) {
                SemiclassicalResult r = stationary_distribution(m, opts.stationary, uniform);
                c.curve.points.push_back({m.tq, marked_mass(r.dist, oracle)});
                c.tc_star.push_back(r.tc_star);
                if (opts.keep_distributions) c.distributions.push_back(std::move(r.dist));
            }
            c.wall_seconds = family_seconds + seconds_since(start);
        }
    }
    return out;
}

void export_weighted_graph(const SemiclassicalMatrix& m, const std::string& path) {
    std::ostringstream out;
    out << "src,dst,weight\n";
    for (int src = 0; src < m.n(); ++src)
        for (int dst = 0; dst < m.n(); ++dst) {
            const double w = m.m(dst, src);
            if (w != 0.0) out << src << ',' << dst << ',' << format_double(w) << '\n';
        }
    write_text_file(path, out.str());
}

SemiclassicalMatrix load_weighted_graph(const std::string& path) {
    const CsvTable table = read_csv(path);
    const std::size_t src_col = table.column("src");
    const std::size_t dst_col = table.column("dst");
    const std::size_t w_col = table.column("weight");
    int n = 0;
    for (const auto& row : table.rows) {
        n = std::max(n, static_cast<int>(parse_int(row[src_col])) + 1);
        n = std::max(n, static_cast<int>(parse_int(row[dst_col])) + 1);
    }
    SemiclassicalMatrix m;
    m.m = DenseMatrix(n);
    for (const auto& row : table.rows)
        m.m(static_cast<int>(parse_int(row[dst_col])), static_cast<int>(parse_int(row[src_col]))) =
            parse_double(row[w_col]);
    return m;
}

}  // namespace qsr

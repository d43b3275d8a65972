#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsr/szegedy.hpp"

namespace qsr {

struct CurvePoint {
    int tq = 0;
    double p = 0.0;
};

// Marked-set probability indexed by quantum time, tq strictly increasing from 1.
struct ProbabilityCurve {
    std::vector<CurvePoint> points;

    bool empty() const { return points.empty(); }
    int size() const { return static_cast<int>(points.size()); }

    // Probability at a given tq; throws std::invalid_argument when absent.
    double at(int tq) const;
};

// Transition matrix of the semiclassical walk at a fixed quantum time:
// entry (j, i) is the probability of measuring node j in register 2 after
// evolving the proxy state of node i for tq steps. Column-stochastic.
struct SemiclassicalMatrix {
    int tq = 0;
    DenseMatrix m;

    int n() const { return m.n(); }
    double max_column_sum_error() const;
};

struct SemiclassicalResult {
    Distribution dist;
    int tc_star = 0;      // classical steps until the iterate stopped moving
    double residual = 0.0;
    std::vector<Distribution> trajectory;  // filled when requested; [0] is the initial distribution
};

struct QuantumPagerankOptions {
    int steps = 1000;   // averaging horizon T
    bool adaptive = false;  // stop once the running average settles
    double adaptive_tol = 1e-6;
    int adaptive_window = 50;
};

struct QuantumPagerankResult {
    Distribution dist;
    int steps_used = 0;
};

// Time-averaged register-2 marginal of the bare (oracle-free) walk started
// from the equal superposition: the mean of the marginals at t = 0..steps.
QuantumPagerankResult quantum_pagerank(const GoogleMatrix& g, const QuantumPagerankOptions& opts);
Distribution quantum_pagerank(const GoogleMatrix& g, int steps = 1000);

struct SearchCurveResult {
    ProbabilityCurve curve;        // tq = 1..t_max
    Distribution marginal_t0;      // unevolved marginal, kept out of maxima searches
    std::vector<Distribution> marginals;  // per tq, when keep_distributions
};

// Evolves the equal superposition with the oracle walk, recording the
// register-2 marginal and the marked-set mass after each step.
SearchCurveResult quantum_searchrank_curve(const GoogleMatrix& g, const OracleSet& oracle, int t_max,
                                           bool keep_distributions = true);

// Which operator advances one unit of quantum time when building
// semiclassical matrices: the search walk step (the default), or a single
// bare half step (diagnostic; one bare unit maps every proxy state to a
// register-2 point mass, giving the identity matrix).
enum class WalkOperator { search, bare };

SemiclassicalMatrix semiclassical_matrix(const GoogleMatrix& g, const OracleSet& oracle, int tq,
                                         WalkOperator op = WalkOperator::search, int threads = 1);

// All matrices for tq = 1..t_max from a single evolution pass per start node.
// Output memory is O(n^2 * t_max); working state is one walk per thread.
std::vector<SemiclassicalMatrix> semiclassical_family(const GoogleMatrix& g, const OracleSet& oracle,
                                                      int t_max, int threads = 1);

struct StationaryOptions {
    double tol = 1e-8;  // L1 fixed-point residual
    int max_steps = 10000;
    bool keep_trajectory = false;
};

// Power iteration of the semiclassical walk from `initial` (uniform when
// absent). Mirrors the operational walk; throws ConvergenceError when
// max_steps is exhausted.
SemiclassicalResult stationary_distribution(const SemiclassicalMatrix& m, const StationaryOptions& opts = {},
                                            std::optional<Distribution> initial = std::nullopt);

SemiclassicalResult semiclassical_searchrank(const GoogleMatrix& g, const OracleSet& oracle, int tq,
                                             const StationaryOptions& opts = {},
                                             std::optional<Distribution> initial = std::nullopt,
                                             int threads = 1);

// One classical step from the uniform distribution: the semiclassical matrix
// applied to uniform, i.e. the register-2 statistics of the walk run on an
// even mixture of all proxy states. The mixture is realized directly as the
// average over pure-state evolutions; no density matrix is formed.
Distribution randomized_searchrank(const GoogleMatrix& g, const OracleSet& oracle, int tq, int threads = 1);

enum class Algorithm { quantum, semiclassical, randomized };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

struct AlgorithmCurves {
    ProbabilityCurve curve;
    std::vector<Distribution> distributions;  // per tq: instantaneous marginal (quantum),
                                              // stationary distribution (semiclassical),
                                              // one-step distribution (randomized)
    std::vector<int> tc_star;                 // semiclassical only, per tq
    double wall_seconds = 0.0;
};

struct CurveOptions {
    bool keep_distributions = true;
    StationaryOptions stationary;
    int threads = 1;
};

// Marked-set probability curves for the requested algorithms over tq in
// [1, t_max]. The semiclassical and randomized curves share one
// column-family pass, so the total work is one evolution per start node.
std::map<Algorithm, AlgorithmCurves> searchrank_curves(const GoogleMatrix& g, const OracleSet& oracle,
                                                       int t_max, const std::vector<Algorithm>& which,
                                                       const CurveOptions& opts = {});

// CSV "src,dst,weight" view of the semiclassical walk as a weighted graph;
// weight = m(dst, src), zero entries omitted, weights per src sum to 1.
void export_weighted_graph(const SemiclassicalMatrix& m, const std::string& path);
SemiclassicalMatrix load_weighted_graph(const std::string& path);

}  // namespace qsr

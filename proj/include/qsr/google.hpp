#pragma once

#include "qsr/graph.hpp"
#include "qsr/matrix.hpp"

namespace qsr {

// Column-stochastic Google matrix: alpha * E + (1 - alpha)/n * ones, where E
// is the dangling-patched connectivity matrix. Immutable after construction.
struct GoogleMatrix {
    double alpha = 0.0;
    DenseMatrix m;

    int n() const { return m.n(); }

    // Invariant check: columns sum to 1 within 1e-12, entries nonnegative and,
    // for alpha < 1, no smaller than the mixing floor (1 - alpha)/n.
    bool is_valid() const;
};

// Entry (k, j) = 1/outdeg(j) when j links to k; dangling nodes give zero
// columns.
DenseMatrix connectivity_matrix(const DirectedGraph& g);

// Replaces every zero column with the uniform column 1/n.
DenseMatrix patch_dangling(const DenseMatrix& h);

GoogleMatrix google_matrix(const DenseMatrix& e, double alpha);

// All three stages in one call.
GoogleMatrix google_from_graph(const DirectedGraph& g, double alpha);

struct PagerankOptions {
    double tol = 1e-10;  // L1 fixed-point residual
    int max_iter = 10000;
};

// Power iteration from the uniform distribution; each iterate is renormalized
// to absorb floating-point drift. The returned vector p satisfies
// |G p - p|_1 <= tol. Throws ConvergenceError when max_iter is exhausted.
Distribution classical_pagerank(const GoogleMatrix& g, const PagerankOptions& opts = {});
Distribution classical_pagerank(const GoogleMatrix& g, Distribution initial,
                                const PagerankOptions& opts = {});

}  // namespace qsr

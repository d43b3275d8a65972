#include "qsr/google.hpp"

#include <cmath>
#include <stdexcept>

#include "qsr/errors.hpp"

namespace qsr {

bool GoogleMatrix::is_valid() const {
    const int n = m.n();
    if (n < 1 || alpha < 0.0 || alpha > 1.0) return false;
    const double floor = alpha < 1.0 ? (1.0 - alpha) / n - 1e-15 : -1e-15;
    for (int c = 0; c < n; ++c) {
        if (std::abs(m.column_sum(c) - 1.0) > 1e-12) return false;
        for (int r = 0; r < n; ++r)
            if (m(r, c) < floor) return false;
    }
    return true;
}

DenseMatrix connectivity_matrix(const DirectedGraph& g) {
    const int n = g.node_count();
    DenseMatrix h(n);
    const auto outdeg = g.out_degrees();
    for (const auto& [src, dst] : g.edges())
        h(dst, src) = 1.0 / static_cast<double>(outdeg[static_cast<std::size_t>(src)]);
    return h;
}

DenseMatrix patch_dangling(const DenseMatrix& h) {
    const int n = h.n();
    DenseMatrix e = h;
    const double uniform = 1.0 / n;
    for (int c = 0; c < n; ++c) {
        bool zero_column = true;
        for (int r = 0; r < n && zero_column; ++r)
            if (e(r, c) != 0.0) zero_column = false;
        if (zero_column)
            for (int r = 0; r < n; ++r) e(r, c) = uniform;
    }
    return e;
}

GoogleMatrix google_matrix(const DenseMatrix& e, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("google_matrix: alpha must be in [0, 1]");
    const int n = e.n();
    if (n < 1) throw std::invalid_argument("google_matrix: empty matrix");
    GoogleMatrix g;
    g.alpha = alpha;
    g.m = DenseMatrix(n);
    const double mix = (1.0 - alpha) / n;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g.m(r, c) = alpha * e(r, c) + mix;
    return g;
}

GoogleMatrix google_from_graph(const DirectedGraph& g, double alpha) {
    return google_matrix(patch_dangling(connectivity_matrix(g)), alpha);
}

Distribution classical_pagerank(const GoogleMatrix& g, Distribution initial, const PagerankOptions& opts) {
    if (opts.tol <= 0.0) throw std::invalid_argument("classical_pagerank: tol must be positive");
    if (initial.n() != g.n()) throw std::invalid_argument("classical_pagerank: dimension mismatch");

    Distribution p = std::move(initial);
    p.normalize();
    std::vector<double> next;
    double residual = 0.0;
    for (int iter = 0; iter <= opts.max_iter; ++iter) {
        g.m.multiply(p.p, next);
        residual = 0.0;
        for (int i = 0; i < g.n(); ++i) residual += std::abs(next[static_cast<std::size_t>(i)] - p.p[static_cast<std::size_t>(i)]);
        if (residual <= opts.tol) return p;  // p itself satisfies |Gp - p|_1 <= tol
        p.p = next;
        p.normalize();
    }
    throw ConvergenceError("classical_pagerank did not converge", residual, opts.max_iter);
}

Distribution classical_pagerank(const GoogleMatrix& g, const PagerankOptions& opts) {
    return classical_pagerank(g, Distribution::uniform(g.n()), opts);
}

}  // namespace qsr

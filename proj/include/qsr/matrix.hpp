#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qsr {

// Dense square matrix of doubles, row-major. Transition matrices in this
// project are column-stochastic: entry (r, c) is the weight of the move
// c -> r, so column c is the outgoing profile of node c.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n, double fill = 0.0)
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
        if (n < 0) throw std::invalid_argument("DenseMatrix: negative dimension");
    }

    int n() const { return n_; }

    double& operator()(int r, int c) { return a_[idx(r, c)]; }
    double operator()(int r, int c) const { return a_[idx(r, c)]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    double column_sum(int c) const {
        double s = 0.0;
        for (int r = 0; r < n_; ++r) s += a_[idx(r, c)];
        return s;
    }

    // y = M x
    void multiply(const std::vector<double>& x, std::vector<double>& y) const;

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
    }

    int n_ = 0;
    std::vector<double> a_;
};

inline void DenseMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("multiply: dimension mismatch");
    y.assign(static_cast<std::size_t>(n_), 0.0);
    for (int r = 0; r < n_; ++r) {
        const double* row = a_.data() + static_cast<std::size_t>(r) * n_;
        double s = 0.0;
        for (int c = 0; c < n_; ++c) s += row[c] * x[c];
        y[static_cast<std::size_t>(r)] = s;
    }
}

// Probability vector over the nodes of a graph.
struct Distribution {
    std::vector<double> p;

    Distribution() = default;
    explicit Distribution(std::vector<double> values) : p(std::move(values)) {}

    int n() const { return static_cast<int>(p.size()); }

    static Distribution uniform(int n) {
        if (n < 1) throw std::invalid_argument("Distribution::uniform: n must be >= 1");
        return Distribution(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
    }

    double sum() const {
        double s = 0.0;
        for (double v : p) s += v;
        return s;
    }

    void normalize() {
        const double s = sum();
        if (s <= 0.0) throw std::domain_error("Distribution::normalize: nonpositive total mass");
        for (double& v : p) v /= s;
    }

    // Invariant check: entries >= 0 and total mass 1 within tol.
    bool is_valid(double tol = 1e-10) const {
        for (double v : p)
            if (v < 0.0 || !std::isfinite(v)) return false;
        return std::abs(sum() - 1.0) <= tol;
    }

    bool operator==(const Distribution&) const = default;
};

inline double l1_distance(const Distribution& a, const Distribution& b) {
    if (a.n() != b.n()) throw std::invalid_argument("l1_distance: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.n(); ++i) s += std::abs(a.p[i] - b.p[i]);
    return s;
}

}  // namespace qsr

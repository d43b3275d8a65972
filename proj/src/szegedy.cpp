#include "qsr/szegedy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsr {

SqrtColumns build_sqrt_columns(const GoogleMatrix& g) {
    const int n = g.n();
    SqrtColumns sq(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) sq.value(k, i) = std::sqrt(g.m(k, i));
    return sq;
}

double WalkState::norm() const {
    double s = 0.0;
    for (const auto& a : a_) s += a.real() * a.real() + a.imag() * a.imag();
    return std::sqrt(s);
}

OracleSet::OracleSet(std::vector<int> marked, int n) : marked_(std::move(marked)) {
    std::sort(marked_.begin(), marked_.end());
    for (std::size_t i = 0; i < marked_.size(); ++i) {
        if (marked_[i] < 0 || marked_[i] >= n)
            throw std::invalid_argument("OracleSet: node index out of range");
        if (i > 0 && marked_[i] == marked_[i - 1])
            throw std::invalid_argument("OracleSet: duplicate node index");
    }
}

bool OracleSet::contains(int node) const {
    return std::binary_search(marked_.begin(), marked_.end(), node);
}

WalkState psi_state(const SqrtColumns& sq, int i) {
    const int n = sq.n();
    if (i < 0 || i >= n) throw std::invalid_argument("psi_state: node index out of range");
    WalkState s(n);
    const double* col = sq.column(i);
    std::complex<double>* row = s.row(i);
    for (int k = 0; k < n; ++k) row[k] = {col[k], 0.0};
    return s;
}

WalkState initial_superposition(const SqrtColumns& sq) {
    const int n = sq.n();
    WalkState s(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        const double* col = sq.column(i);
        std::complex<double>* row = s.row(i);
        for (int k = 0; k < n; ++k) row[k] = {col[k] * scale, 0.0};
    }
    return s;
}

WalkState apply_reflection(WalkState s, const SqrtColumns& sq) {
    const int n = s.n();
    if (sq.n() != n) throw std::invalid_argument("apply_reflection: dimension mismatch");
    for (int i = 0; i < n; ++i) {
        const double* col = sq.column(i);
        std::complex<double>* row = s.row(i);
        double cr = 0.0, ci = 0.0;
        for (int k = 0; k < n; ++k) {
            cr += col[k] * row[k].real();
            ci += col[k] * row[k].imag();
        }
        cr *= 2.0;
        ci *= 2.0;
        for (int k = 0; k < n; ++k)
            row[k] = {cr * col[k] - row[k].real(), ci * col[k] - row[k].imag()};
    }
    return s;
}

WalkState apply_swap(WalkState s) {
    const int n = s.n();
    constexpr int block = 32;
    for (int bi = 0; bi < n; bi += block) {
        const int imax = std::min(bi + block, n);
        // Diagonal block.
        for (int i = bi; i < imax; ++i)
            for (int k = i + 1; k < imax; ++k) std::swap(s.amp(i, k), s.amp(k, i));
        // Off-diagonal blocks.
        for (int bk = bi + block; bk < n; bk += block) {
            const int kmax = std::min(bk + block, n);
            for (int i = bi; i < imax; ++i)
                for (int k = bk; k < kmax; ++k) std::swap(s.amp(i, k), s.amp(k, i));
        }
    }
    return s;
}

WalkState apply_oracle(WalkState s, const OracleSet& oracle) {
    const int n = s.n();
    for (int i : oracle.nodes()) {
        if (i >= n) throw std::invalid_argument("apply_oracle: marked node out of range");
        std::complex<double>* row = s.row(i);
        for (int k = 0; k < n; ++k) row[k] = -row[k];
    }
    return s;
}

WalkState half_step_walk(WalkState s, const SqrtColumns& sq, const OracleSet& oracle) {
    s = apply_reflection(std::move(s), sq);
    s = apply_oracle(std::move(s), oracle);
    return apply_swap(std::move(s));
}

WalkState step_walk(WalkState s, const SqrtColumns& sq, const OracleSet& oracle) {
    s = half_step_walk(std::move(s), sq, oracle);
    return half_step_walk(std::move(s), sq, oracle);
}

Distribution marginal_register2(const WalkState& s) {
    const int n = s.n();
    Distribution dist(std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        const std::complex<double>* row = s.row(i);
        for (int k = 0; k < n; ++k)
            dist.p[static_cast<std::size_t>(k)] += row[k].real() * row[k].real() + row[k].imag() * row[k].imag();
    }
    return dist;
}

double marked_mass(const Distribution& dist, const OracleSet& oracle) {
    double mass = 0.0;
    for (int i : oracle.nodes()) {
        if (i >= dist.n()) throw std::invalid_argument("marked_mass: node out of range");
        mass += dist.p[static_cast<std::size_t>(i)];
    }
    return mass;
}

}  // namespace qsr

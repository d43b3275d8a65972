#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qsr/google.hpp"

namespace qsr {

// Entrywise square roots of the Google matrix columns. Stored column-major so
// that column i -- the outgoing amplitude profile of node i -- is contiguous,
// which keeps the reflection row-local.
class SqrtColumns {
public:
    SqrtColumns() = default;
    explicit SqrtColumns(int n) : n_(n), s_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    int n() const { return n_; }

    // s(k, i) = sqrt(G(k, i))
    double value(int k, int i) const { return s_[idx(k, i)]; }
    double& value(int k, int i) { return s_[idx(k, i)]; }

    const double* column(int i) const { return s_.data() + static_cast<std::size_t>(i) * n_; }

    std::size_t heap_bytes() const { return s_.capacity() * sizeof(double); }

private:
    std::size_t idx(int k, int i) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
    }

    int n_ = 0;
    std::vector<double> s_;
};

SqrtColumns build_sqrt_columns(const GoogleMatrix& g);

// Pure state on the doubled space: amp(i, k) is the amplitude of register 1
// holding node i and register 2 holding node k. Row-major, so a reflection is
// a dot product plus a rank-1 update per row and the register swap is a
// transpose; one walk step touches Theta(n^2) amplitudes and nothing bigger
// than n x n is ever materialized.
class WalkState {
public:
    WalkState() = default;
    explicit WalkState(int n)
        : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {0.0, 0.0}) {}

    int n() const { return n_; }

    std::complex<double> amp(int i, int k) const { return a_[idx(i, k)]; }
    std::complex<double>& amp(int i, int k) { return a_[idx(i, k)]; }

    std::complex<double>* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }
    const std::complex<double>* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

    double norm() const;

    std::size_t heap_bytes() const { return a_.capacity() * sizeof(std::complex<double>); }

private:
    std::size_t idx(int i, int k) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
    }

    int n_ = 0;
    std::vector<std::complex<double>> a_;
};

// Search targets. Empty set: the oracle acts as the identity.
class OracleSet {
public:
    OracleSet() = default;
    OracleSet(std::vector<int> marked, int n);  // validates: in range, duplicates rejected

    const std::vector<int>& nodes() const { return marked_; }  // sorted ascending
    bool empty() const { return marked_.empty(); }
    int size() const { return static_cast<int>(marked_.size()); }
    bool contains(int node) const;

private:
    std::vector<int> marked_;
};

// |i>_1 tensor sum_k sqrt(G(k, i)) |k>_2 : the walker proxy for node i.
WalkState psi_state(const SqrtColumns& sq, int i);

// Equal superposition of all proxy states; amp(i, k) = sqrt(G(k, i)) / sqrt(n).
WalkState initial_superposition(const SqrtColumns& sq);

// Reflection over the span of the proxy states: per row i, with c = <column i
// of sq, row i of amp>, the row becomes 2 c sq - row.
WalkState apply_reflection(WalkState s, const SqrtColumns& sq);

// Register swap: transpose of the amplitude matrix (in place, blocked).
WalkState apply_swap(WalkState s);

// Sign flip of every row in the marked set (oracle on register 1).
WalkState apply_oracle(WalkState s, const OracleSet& oracle);

// One evolution step of the search walk: two rounds of reflection, oracle,
// swap. With an empty oracle this is the bare walk applied twice, the even
// power required for register-2 readout.
WalkState step_walk(WalkState s, const SqrtColumns& sq, const OracleSet& oracle);

// A single reflection-oracle-swap round (half of step_walk). Diagnostic.
WalkState half_step_walk(WalkState s, const SqrtColumns& sq, const OracleSet& oracle);

// p_j = sum_i |amp(i, j)|^2, the register-2 measurement statistics.
Distribution marginal_register2(const WalkState& s);

double marked_mass(const Distribution& dist, const OracleSet& oracle);

}  // namespace qsr

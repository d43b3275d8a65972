#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsr/ranks.hpp"

namespace qsr {

struct PeakResult {
    int t_star = 0;      // quantum time of the first maximum
    double p_star = 0.0;
    bool boundary = false;  // true when the curve never descends after rising
};

// The curve maximum, reported at the earliest time attaining it (plateau
// ties resolve to the smallest t). When the curve never descends again after
// the maximum -- in particular when it is non-decreasing throughout -- the
// peak is censored by t_max: the largest attaining t is returned with
// boundary set. Throws std::invalid_argument for curves shorter than 2
// points.
PeakResult first_maximum(const ProbabilityCurve& curve);

// Nearest integer to sqrt(N/M) (half away from zero), never below 1.
int reference_time(int n_nodes, int marked_count);

struct FitResult {
    double prefactor = 0.0;       // A in y = A x^n
    double exponent = 0.0;        // n
    double stderr_prefactor = 0.0;
    double stderr_exponent = 0.0;
    double cutoff = 0.0;  // minimum x admitted to the fit
    int npoints = 0;
};

// Ordinary least squares on (ln x, ln y) over the points with x >= cutoff.
// Standard errors are the usual OLS estimates; the prefactor error comes from
// the intercept via the delta method. Requires >= 3 usable points, all with
// y > 0.
FitResult fit_power_law(const std::vector<std::pair<double, double>>& points, double cutoff = 0.0);

struct KendallResult {
    double tau = 0.0;
    long long pairs = 0;   // total item pairs
    long long ties_a = 0;  // pairs tied in a
    long long ties_b = 0;
};

// Tie-corrected rank correlation (tau-b) of two score lists over the same
// items: (concordant - discordant) / sqrt((P - T_a)(P - T_b)). Throws
// std::domain_error when either list is entirely tied.
KendallResult kendall_tau(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace qsr

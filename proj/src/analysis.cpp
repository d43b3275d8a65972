#include "qsr/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace qsr {

PeakResult first_maximum(const ProbabilityCurve& curve) {
    const auto& pts = curve.points;
    if (pts.size() < 2) throw std::invalid_argument("first_maximum: need at least 2 curve points");

    // The maximum of the curve, reported at the earliest time attaining it
    // (plateau ties resolve to the smallest t). Oscillatory curves have many
    // small local maxima below the measurement peak; those are not it.
    std::size_t first = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].p > pts[first].p) first = i;

    // A descent after the peak certifies it is not censored by t_max.
    for (std::size_t i = first + 1; i < pts.size(); ++i)
        if (pts[i].p < pts[first].p) return {pts[first].tq, pts[first].p, false};

    // Censored: the curve never drops below the maximum again (in particular
    // any non-decreasing curve). Report the largest attaining t.
    std::size_t last = first;
    for (std::size_t i = first + 1; i < pts.size(); ++i)
        if (pts[i].p == pts[first].p) last = i;
    return {pts[last].tq, pts[last].p, true};
}

int reference_time(int n_nodes, int marked_count) {
    if (n_nodes < 1 || marked_count < 1 || marked_count > n_nodes)
        throw std::invalid_argument("reference_time: need 1 <= M <= N");
    const long long t = std::llround(std::sqrt(static_cast<double>(n_nodes) / marked_count));
    return t < 1 ? 1 : static_cast<int>(t);
}

FitResult fit_power_law(const std::vector<std::pair<double, double>>& points, double cutoff) {
    std::vector<std::pair<double, double>> logs;
    for (const auto& [x, y] : points) {
        if (x < cutoff) continue;
        if (y <= 0.0) throw std::invalid_argument("fit_power_law: nonpositive y among usable points");
        if (x <= 0.0) throw std::invalid_argument("fit_power_law: nonpositive x among usable points");
        logs.emplace_back(std::log(x), std::log(y));
    }
    const int m = static_cast<int>(logs.size());
    if (m < 3) throw std::invalid_argument("fit_power_law: need at least 3 points above the cutoff");

    double sx = 0.0, sy = 0.0;
    for (const auto& [lx, ly] : logs) {
        sx += lx;
        sy += ly;
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [lx, ly] : logs) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_power_law: all x equal");

    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    double ssr = 0.0;
    for (const auto& [lx, ly] : logs) {
        const double r = ly - (intercept + slope * lx);
        ssr += r * r;
    }
    // With exactly 3 points and a perfect fit the variance estimate is 0.
    const double sigma2 = m > 2 ? ssr / (m - 2) : 0.0;
    const double se_slope = std::sqrt(sigma2 / sxx);
    const double se_intercept = std::sqrt(sigma2 * (1.0 / m + mx * mx / sxx));

    FitResult fit;
    fit.exponent = slope;
    fit.prefactor = std::exp(intercept);
    fit.stderr_exponent = se_slope;
    fit.stderr_prefactor = fit.prefactor * se_intercept;
    fit.cutoff = cutoff;
    fit.npoints = m;
    return fit;
}

KendallResult kendall_tau(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("kendall_tau: length mismatch");
    const int m = static_cast<int>(a.size());
    if (m < 2) throw std::invalid_argument("kendall_tau: need at least 2 items");

    long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0.0) ++ties_a;
            if (db == 0.0) ++ties_b;
            if (da == 0.0 || db == 0.0) continue;
            if ((da > 0.0) == (db > 0.0))
                ++concordant;
            else
                ++discordant;
        }

    const long long pairs = static_cast<long long>(m) * (m - 1) / 2;
    const double denom_a = static_cast<double>(pairs - ties_a);
    const double denom_b = static_cast<double>(pairs - ties_b);
    if (denom_a <= 0.0 || denom_b <= 0.0)
        throw std::domain_error("kendall_tau: correlation undefined (a list is entirely tied)");

    KendallResult result;
    result.tau = static_cast<double>(concordant - discordant) / std::sqrt(denom_a * denom_b);
    result.pairs = pairs;
    result.ties_a = ties_a;
    result.ties_b = ties_b;
    return result;
}

}  // namespace qsr

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qsr/analysis.hpp"
#include "qsr/rng.hpp"

using namespace qsr;

namespace {

ProbabilityCurve make_curve(std::initializer_list<double> values) {
    ProbabilityCurve curve;
    int tq = 1;
    for (double v : values) curve.points.push_back({tq++, v});
    return curve;
}

}  // namespace

TEST_CASE("first maximum finds the earliest interior peak") {
    const PeakResult r = first_maximum(make_curve({0.2, 0.8, 0.5}));
    CHECK(r.t_star == 2);
    CHECK(r.p_star == 0.8);
    CHECK_FALSE(r.boundary);
}

TEST_CASE("monotone curves report a boundary maximum at the last point") {
    const PeakResult r = first_maximum(make_curve({0.1, 0.2, 0.4, 0.9}));
    CHECK(r.t_star == 4);
    CHECK(r.p_star == 0.9);
    CHECK(r.boundary);
}

TEST_CASE("plateaus resolve to the smallest time") {
    const PeakResult r = first_maximum(make_curve({0.5, 0.7, 0.7, 0.6}));
    CHECK(r.t_star == 2);
    CHECK(r.p_star == 0.7);
    CHECK_FALSE(r.boundary);
}

TEST_CASE("a descending first point is itself the peak") {
    const PeakResult r = first_maximum(make_curve({0.9, 0.4, 0.6, 0.2}));
    CHECK(r.t_star == 1);
    CHECK(r.p_star == 0.9);
}

TEST_CASE("small early oscillations do not pre-empt the measurement peak") {
    const PeakResult r = first_maximum(make_curve({0.2, 0.5, 0.3, 0.9, 0.1}));
    CHECK(r.t_star == 4);
    CHECK(r.p_star == 0.9);
    CHECK_FALSE(r.boundary);
}

TEST_CASE("a maximum the curve never drops below again is censored") {
    const PeakResult r = first_maximum(make_curve({0.5, 0.2, 0.7, 0.7}));
    CHECK(r.t_star == 4);
    CHECK(r.p_star == 0.7);
    CHECK(r.boundary);
}

TEST_CASE("short curves are rejected") {
    CHECK_THROWS_AS(first_maximum(make_curve({0.5})), std::invalid_argument);
    CHECK_THROWS_AS(first_maximum(ProbabilityCurve{}), std::invalid_argument);
}

TEST_CASE("truncating after the peak does not move it") {
    Rng rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        ProbabilityCurve curve;
        const int len = 5 + static_cast<int>(rng.next_below(20));
        for (int t = 1; t <= len; ++t) curve.points.push_back({t, rng.next_double()});
        const PeakResult full = first_maximum(curve);
        if (full.boundary || full.t_star + 1 > len) continue;
        ProbabilityCurve truncated;
        truncated.points.assign(curve.points.begin(), curve.points.begin() + full.t_star + 1);
        const PeakResult again = first_maximum(truncated);
        CHECK(again.t_star == full.t_star);
        CHECK(again.p_star == full.p_star);
    }
}

TEST_CASE("reference time rounds sqrt(N/M) half away from zero") {
    CHECK(reference_time(32, 4) == 3);    // sqrt(8) = 2.83
    CHECK(reference_time(512, 6) == 9);   // sqrt(85.3) = 9.24
    CHECK(reference_time(7, 7) == 1);
    CHECK(reference_time(64, 1) == 8);
    CHECK(reference_time(2, 1) == 1);     // sqrt(2) = 1.41
    CHECK_THROWS_AS(reference_time(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(reference_time(4, 0), std::invalid_argument);
}

TEST_CASE("reference time satisfies the rounding bound") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(2000));
        const int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const double ratio = static_cast<double>(n) / m;
        const double t = reference_time(n, m);
        CHECK(t * t >= ratio - std::sqrt(ratio) - 0.25);
        CHECK(t * t <= ratio + std::sqrt(ratio) + 0.25);
    }
}

TEST_CASE("power-law fit recovers noiseless parameters") {
    std::vector<std::pair<double, double>> pts;
    for (double x : {10.0, 20.0, 40.0, 80.0}) pts.emplace_back(x, 2.0 * std::sqrt(x));
    const FitResult fit = fit_power_law(pts);
    CHECK(std::abs(fit.prefactor - 2.0) < 1e-10);
    CHECK(std::abs(fit.exponent - 0.5) < 1e-10);
    CHECK(fit.stderr_exponent < 1e-10);
    CHECK(fit.npoints == 4);
}

TEST_CASE("constant data fits exponent zero") {
    std::vector<std::pair<double, double>> pts{{1, 3.5}, {10, 3.5}, {100, 3.5}, {1000, 3.5}};
    const FitResult fit = fit_power_law(pts);
    CHECK(std::abs(fit.exponent) < 1e-12);
    CHECK(std::abs(fit.prefactor - 3.5) < 1e-10);
}

TEST_CASE("cutoff drops the points below it") {
    std::vector<std::pair<double, double>> pts;
    for (double x : {1.0, 2.0, 4.0, 25.0, 50.0, 100.0, 200.0})
        pts.emplace_back(x, (x >= 20 ? 1.0 : 7.0) * std::pow(x, -1.0));
    const FitResult fit = fit_power_law(pts, 20.0);
    CHECK(fit.npoints == 4);
    CHECK(std::abs(fit.exponent + 1.0) < 1e-10);
    CHECK(std::abs(fit.prefactor - 1.0) < 1e-10);
}

TEST_CASE("fit residuals are orthogonal to the regressor") {
    Rng rng(7);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 30; ++i) {
        const double x = 5.0 + static_cast<double>(i) * 3.0;
        pts.emplace_back(x, 4.0 * std::pow(x, -0.8) * (1.0 + 0.2 * (rng.next_double() - 0.5)));
    }
    const FitResult fit = fit_power_law(pts);
    double dot = 0.0, sx = 0.0;
    for (const auto& [x, y] : pts) sx += std::log(x);
    const double mx = sx / static_cast<double>(pts.size());
    for (const auto& [x, y] : pts) {
        const double r = std::log(y) - (std::log(fit.prefactor) + fit.exponent * std::log(x));
        dot += r * (std::log(x) - mx);
    }
    CHECK(std::abs(dot) < 1e-10);
}

TEST_CASE("degenerate fits are rejected") {
    CHECK_THROWS_AS(fit_power_law({{1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law({{1, 1}, {2, 2}, {30, 0.0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law({{1, 1}, {2, 2}, {3, 3}, {40, 4}}, 20.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law({{5, 1}, {5, 2}, {5, 3}}), std::invalid_argument);
}

TEST_CASE("kendall tau on identical and reversed lists") {
    const std::vector<double> a{0.1, 0.4, 0.2, 0.9, 0.3};
    std::vector<double> reversed_rank(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) reversed_rank[i] = -a[i];

    CHECK(kendall_tau(a, a).tau == doctest::Approx(1.0));
    CHECK(kendall_tau(a, reversed_rank).tau == doctest::Approx(-1.0));
}

TEST_CASE("kendall tau counts one discordant pair out of three") {
    // Rankings (1, 2, 3) vs (1, 3, 2): pairs (1,2) and (1,3) agree, (2,3)
    // disagrees, so tau = (2 - 1) / 3.
    const KendallResult r = kendall_tau({1.0, 2.0, 3.0}, {1.0, 3.0, 2.0});
    CHECK(r.tau == doctest::Approx(1.0 / 3.0));
    CHECK(r.pairs == 3);
    CHECK(r.ties_a == 0);
    CHECK(r.ties_b == 0);
}

TEST_CASE("tau-b corrects for ties") {
    // One tied pair in b: P = 3, T_b = 1, C = 2, D = 0.
    const KendallResult r = kendall_tau({1.0, 2.0, 3.0}, {1.0, 2.0, 2.0});
    CHECK(r.ties_b == 1);
    CHECK(r.tau == doctest::Approx(2.0 / std::sqrt(3.0 * 2.0)));
}

TEST_CASE("kendall tau is symmetric and invariant under monotone transforms") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a, b;
        for (int i = 0; i < 12; ++i) {
            a.push_back(rng.next_double());
            b.push_back(rng.next_double());
        }
        const double tau = kendall_tau(a, b).tau;
        CHECK(kendall_tau(b, a).tau == doctest::Approx(tau).epsilon(1e-12));

        std::vector<double> squeezed = a;  // strictly increasing transform
        for (double& v : squeezed) v = std::exp(3.0 * v) + 1.0;
        CHECK(kendall_tau(squeezed, b).tau == doctest::Approx(tau).epsilon(1e-12));
    }
}

TEST_CASE("fully tied lists have undefined correlation") {
    CHECK_THROWS_AS(kendall_tau({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), std::domain_error);
    CHECK_THROWS_AS(kendall_tau({1.0, 2.0, 3.0}, {4.0, 4.0, 4.0}), std::domain_error);
    CHECK_THROWS_AS(kendall_tau({1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(kendall_tau({1.0, 2.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
}

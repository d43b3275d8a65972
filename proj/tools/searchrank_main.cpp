// SearchRank distributions and probability curves for one graph.

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "qsr/analysis.hpp"
#include "qsr/parallel.hpp"
#include "qsr/ranks.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum, semiclassical and randomized SearchRank"};

    std::string algorithm_name, graph_path, out_path, trajectory_path;
    double alpha = 0.25;
    std::vector<int> marked;
    int tq = 0;
    int t_max = 0;
    bool curve = false;
    qsr::StationaryOptions stationary;
    int threads = 0;

    app.add_option("algorithm", algorithm_name, "quantum | semiclassical | randomized")
        ->required()
        ->check(CLI::IsMember({"quantum", "semiclassical", "randomized"}));
    app.add_option("--graph", graph_path, "Edge-list graph path")->required();
    app.add_option("--alpha", alpha, "Damping parameter")->check(CLI::Range(0.0, 1.0));
    app.add_option("--marked", marked, "Marked nodes (comma separated)")->delimiter(',')->required();
    app.add_option("--tq", tq, "Quantum time for a single distribution");
    app.add_flag("--curve", curve, "Emit the marked-probability curve instead");
    app.add_option("--tmax", t_max, "Largest quantum time of the curve");
    app.add_option("--trajectory", trajectory_path,
                   "Also write the semiclassical per-step distributions (tc,node,prob)");
    app.add_option("--stationary-tol", stationary.tol, "Semiclassical fixed-point tolerance");
    app.add_option("--threads", threads, "Worker threads (0 = hardware)");
    app.add_option("--out", out_path, "Output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        if (curve == (tq > 0))
            throw std::invalid_argument("choose exactly one of --tq T or --curve --tmax T");
        if (curve && t_max < 1) throw std::invalid_argument("--curve requires --tmax >= 1");

        const qsr::Algorithm algorithm = qsr::algorithm_from_string(algorithm_name);
        const qsr::DirectedGraph g = qsr::load_edge_list(graph_path);
        const qsr::GoogleMatrix google = qsr::google_from_graph(g, alpha);
        const qsr::OracleSet oracle(marked, g.node_count());
        if (threads <= 0) threads = qsr::default_thread_count();

        if (curve) {
            qsr::CurveOptions opts;
            opts.keep_distributions = false;
            opts.stationary = stationary;
            opts.threads = threads;
            const auto curves = qsr::searchrank_curves(google, oracle, t_max, {algorithm}, opts);
            qsr::cli::write_curve_csv(curves.at(algorithm).curve, out_path);
            const qsr::PeakResult peak = qsr::first_maximum(curves.at(algorithm).curve);
            std::cout << "first maximum: tq=" << peak.t_star << " p=" << peak.p_star
                      << (peak.boundary ? " (boundary)" : "") << '\n';
            return;
        }

        switch (algorithm) {
            case qsr::Algorithm::quantum: {
                const auto result = qsr::quantum_searchrank_curve(google, oracle, tq, true);
                qsr::cli::write_distribution_csv(result.marginals.back(), out_path);
                break;
            }
            case qsr::Algorithm::semiclassical: {
                stationary.keep_trajectory = !trajectory_path.empty();
                const auto result =
                    qsr::semiclassical_searchrank(google, oracle, tq, stationary, std::nullopt, threads);
                qsr::cli::write_distribution_csv(result.dist, out_path);
                if (!trajectory_path.empty())
                    qsr::cli::write_trajectory_csv(result.trajectory, trajectory_path);
                std::cout << "converged after " << result.tc_star << " classical steps\n";
                break;
            }
            case qsr::Algorithm::randomized: {
                qsr::cli::write_distribution_csv(qsr::randomized_searchrank(google, oracle, tq, threads),
                                                 out_path);
                break;
            }
        }
    });
}

// Classical PageRank of an edge-list graph by power iteration.

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "qsr/google.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Classical PageRank"};

    std::string graph_path, out_path;
    double alpha = 0.85;
    qsr::PagerankOptions opts;

    app.add_option("--graph", graph_path, "Edge-list graph path")->required();
    app.add_option("--alpha", alpha, "Damping parameter")->check(CLI::Range(0.0, 1.0));
    app.add_option("--tol", opts.tol, "L1 fixed-point tolerance");
    app.add_option("--max-iter", opts.max_iter, "Iteration budget");
    app.add_option("--out", out_path, "Output CSV path (node,score)")->required();

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        const qsr::DirectedGraph g = qsr::load_edge_list(graph_path);
        const qsr::Distribution p = qsr::classical_pagerank(qsr::google_from_graph(g, alpha), opts);
        qsr::cli::write_distribution_csv(p, out_path);
    });
}

// Generates a directed scale-free graph and stores it as an edge list.

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "qsr/graph.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Directed scale-free network generator"};

    int nodes = 0;
    std::uint64_t seed = 1;
    qsr::ScaleFreeParams params;
    std::string out_path;

    app.add_option("--nodes", nodes, "Number of nodes")->required()->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--a", params.new_node_out, "Probability of a new node with an outgoing edge");
    app.add_option("--b", params.existing_edge, "Probability of an edge between existing nodes");
    app.add_option("--g", params.new_node_in, "Probability of a new node with an incoming edge");
    app.add_option("--din", params.delta_in, "In-degree offset");
    app.add_option("--dout", params.delta_out, "Out-degree offset");
    app.add_option("--out", out_path, "Output edge-list path")->required();

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        const qsr::DirectedGraph g = qsr::generate_scale_free(nodes, seed, params);
        qsr::store_edge_list(g, out_path);
        std::cout << "wrote " << g.node_count() << " nodes, " << g.edge_count() << " edges to "
                  << out_path << '\n';
    });
}

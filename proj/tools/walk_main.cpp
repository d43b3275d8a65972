// Debug view of the walk: register-2 marginal after every step.

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "qsr/szegedy.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Walk evolution inspector"};

    std::string graph_path, dump_path;
    double alpha = 0.25;
    std::vector<int> marked;
    int tq = 10;

    app.add_option("--graph", graph_path, "Edge-list graph path")->required();
    app.add_option("--alpha", alpha, "Damping parameter")->check(CLI::Range(0.0, 1.0));
    app.add_option("--marked", marked, "Marked nodes (comma separated)")->delimiter(',');
    app.add_option("--tq", tq, "Number of steps")->check(CLI::PositiveNumber);
    app.add_option("--dump-marginal", dump_path, "Output CSV path (t,node,prob)")->required();

    CLI11_PARSE(app, argc, argv);

    return qsr::cli::guarded([&] {
        const qsr::DirectedGraph g = qsr::load_edge_list(graph_path);
        const qsr::GoogleMatrix google = qsr::google_from_graph(g, alpha);
        const qsr::SqrtColumns sq = qsr::build_sqrt_columns(google);
        const qsr::OracleSet oracle(marked, g.node_count());

        std::ostringstream out;
        out << "t,node,prob\n";
        auto dump = [&](int t, const qsr::Distribution& p) {
            for (int node = 0; node < p.n(); ++node)
                out << t << ',' << node << ',' << qsr::format_double(p.p[static_cast<std::size_t>(node)])
                    << '\n';
        };

        qsr::WalkState state = qsr::initial_superposition(sq);
        dump(0, qsr::marginal_register2(state));
        for (int t = 1; t <= tq; ++t) {
            state = qsr::step_walk(std::move(state), sq, oracle);
            dump(t, qsr::marginal_register2(state));
        }
        qsr::write_text_file(dump_path, out.str());
    });
}

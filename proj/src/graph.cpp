#include "qsr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qsr/errors.hpp"
#include "qsr/rng.hpp"

namespace qsr {

DirectedGraph::DirectedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("DirectedGraph: node count must be >= 1");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [src, dst] = edges_[i];
        if (src < 0 || src >= n || dst < 0 || dst >= n)
            throw std::invalid_argument("DirectedGraph: edge endpoint out of range");
        if (src == dst) throw std::invalid_argument("DirectedGraph: self-loop not allowed");
        if (i > 0 && edges_[i] == edges_[i - 1])
            throw std::invalid_argument("DirectedGraph: duplicate edge");
    }
}

std::vector<int> DirectedGraph::out_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [src, dst] : edges_) ++deg[static_cast<std::size_t>(src)];
    return deg;
}

std::vector<int> DirectedGraph::in_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [src, dst] : edges_) ++deg[static_cast<std::size_t>(dst)];
    return deg;
}

void ScaleFreeParams::validate() const {
    if (new_node_out < 0.0 || existing_edge < 0.0 || new_node_in < 0.0)
        throw std::invalid_argument("scale-free params: probabilities must be nonnegative");
    if (std::abs(new_node_out + existing_edge + new_node_in - 1.0) > 1e-9)
        throw std::invalid_argument("scale-free params: probabilities must sum to 1");
    if (delta_in < 0.0 || delta_out < 0.0)
        throw std::invalid_argument("scale-free params: degree offsets must be nonnegative");
}

DirectedGraph generate_scale_free(int n, std::uint64_t seed, const ScaleFreeParams& params) {
    params.validate();
    if (n < 1) throw std::invalid_argument("generate_scale_free: n must be >= 1");

    // The process runs on a multigraph; parallel edges and self-loops count
    // toward the degree-proportional draws and are dropped only at the end.
    std::vector<Edge> multi;
    std::vector<long long> in_deg, out_deg;
    long long edge_total = 0;
    int nodes = 0;

    auto add_node = [&]() {
        in_deg.push_back(0);
        out_deg.push_back(0);
        ++nodes;
    };
    auto add_edge = [&](int src, int dst) {
        multi.emplace_back(src, dst);
        ++out_deg[static_cast<std::size_t>(src)];
        ++in_deg[static_cast<std::size_t>(dst)];
        ++edge_total;
    };

    if (n == 1) {
        add_node();
        return DirectedGraph(1, {});
    }
    if (n == 2) {
        add_node();
        add_node();
        add_edge(0, 1);
        add_edge(1, 0);
    } else {
        add_node();
        add_node();
        add_node();
        add_edge(0, 1);
        add_edge(1, 2);
        add_edge(2, 0);
    }

    if (nodes < n && params.new_node_out + params.new_node_in <= 0.0)
        throw std::invalid_argument("scale-free params: process cannot add nodes (a + g is zero)");

    Rng rng(seed);

    // Linear scan over the cumulative degree-plus-offset weights. Population
    // is the current node set, so draws never see a node added in the same
    // step.
    auto choose = [&](const std::vector<long long>& deg, double delta) {
        const double total = static_cast<double>(edge_total) + delta * nodes;
        const double r = rng.next_double() * total;
        double cum = 0.0;
        for (int v = 0; v < nodes; ++v) {
            cum += static_cast<double>(deg[static_cast<std::size_t>(v)]) + delta;
            if (r < cum) return v;
        }
        return nodes - 1;  // guards the fp edge where r == total
    };

    while (nodes < n) {
        const double move = rng.next_double();
        if (move < params.new_node_out) {
            const int dst = choose(in_deg, params.delta_in);
            const int src = nodes;
            add_node();
            add_edge(src, dst);
        } else if (move < params.new_node_out + params.existing_edge) {
            const int src = choose(out_deg, params.delta_out);
            const int dst = choose(in_deg, params.delta_in);
            add_edge(src, dst);
        } else {
            const int src = choose(out_deg, params.delta_out);
            const int dst = nodes;
            add_node();
            add_edge(src, dst);
        }
    }

    std::vector<Edge> simple;
    simple.reserve(multi.size());
    for (const auto& e : multi)
        if (e.first != e.second) simple.push_back(e);
    std::sort(simple.begin(), simple.end());
    simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
    return DirectedGraph(n, std::move(simple));
}

DirectedGraph load_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            int parsed = -1;
            std::istringstream header(line);
            std::string hash, word;
            if (!(header >> hash >> word >> parsed) || hash != "#" || word != "nodes" || parsed < 1 ||
                (header >> word))
                throw ParseError("expected header '# nodes N'", lineno);
            n = parsed;
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        int src = -1, dst = -1;
        std::string extra;
        if (!(fields >> src >> dst) || (fields >> extra))
            throw ParseError("expected 'src dst'", lineno);
        if (src < 0 || src >= n || dst < 0 || dst >= n)
            throw ParseError("node index out of range [0, " + std::to_string(n) + ")", lineno);
        if (src == dst) throw ParseError("self-loop not allowed", lineno);
        edges.emplace_back(src, dst);
        edge_lines.push_back(lineno);
    }
    if (n < 1) throw ParseError("missing header '# nodes N'", 1);

    // Duplicate detection reports the line of the second occurrence.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edges[a] != edges[b] ? edges[a] < edges[b] : edge_lines[a] < edge_lines[b];
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            const Edge& e = edges[order[i]];
            throw ParseError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second),
                             edge_lines[order[i]]);
        }
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void store_edge_list(const DirectedGraph& g, std::ostream& out) {
    out << "# nodes " << g.node_count() << '\n';
    for (const auto& [src, dst] : g.edges()) out << src << ' ' << dst << '\n';
}

void store_edge_list(const DirectedGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    store_edge_list(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qsr

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qsr {

using Edge = std::pair<int, int>;  // (src, dst)

// Simple directed graph over nodes 0..n-1: no self-loops, no parallel edges.
// Immutable after construction.
class DirectedGraph {
public:
    DirectedGraph(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted by (src, dst)
    std::size_t edge_count() const { return edges_.size(); }

    std::vector<int> out_degrees() const;
    std::vector<int> in_degrees() const;

    bool operator==(const DirectedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Move probabilities and degree offsets of the directed preferential-attachment
// process. The three probabilities must sum to 1:
//   new_node_out: add a node with an edge to an existing node (target drawn by in-degree)
//   existing_edge: add an edge between existing nodes (source by out-degree, target by in-degree)
//   new_node_in:  add a node with an edge from an existing node (source drawn by out-degree)
// delta_in / delta_out smooth the degree-proportional draws.
struct ScaleFreeParams {
    double new_node_out = 0.41;
    double existing_edge = 0.54;
    double new_node_in = 0.05;
    double delta_in = 0.2;
    double delta_out = 0.0;

    void validate() const;  // throws std::invalid_argument
};

// Grows a graph by preferential attachment until it has exactly n nodes, then
// collapses the multigraph to a simple digraph (self-loops and parallel edges
// dropped). Deterministic for fixed (n, seed, params). Seed graphs: a directed
// 3-cycle for n >= 3, a 2-cycle for n == 2, a single bare node for n == 1.
DirectedGraph generate_scale_free(int n, std::uint64_t seed, const ScaleFreeParams& params = {});

// Edge-list text format: first line "# nodes N", then one "src dst" pair per
// line (ASCII decimal, single space). Lines starting with '#' are comments.
DirectedGraph load_edge_list(const std::string& path);
DirectedGraph load_edge_list(std::istream& in);
void store_edge_list(const DirectedGraph& g, const std::string& path);
void store_edge_list(const DirectedGraph& g, std::ostream& out);

}  // namespace qsr

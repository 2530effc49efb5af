#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treegraph/rational.hpp"

namespace treegraph {

using VertexId = int;

// Vertex subsets are kept sorted ascending. The position of a vertex in the
// graph's vertex list is its identity and also its rank in the total order
// used by every ordering-sensitive algorithm.
using VertexSet = std::vector<VertexId>;

struct Edge {
    int id = -1;
    VertexId source = -1;
    VertexId target = -1;
};

// Maximum vertex count for subset enumeration (2^n bitmasks).
inline constexpr int kSubsetEnumerationGuard = 14;

class DiGraph {
public:
    DiGraph() = default;

    // Builds a simple digraph. Loops are dropped (recorded, not an error);
    // a repeated (source, target) pair is rejected.
    static DiGraph make(std::vector<std::string> vertex_names,
                        const std::vector<std::pair<VertexId, VertexId>>& arcs);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    const std::string& vertex_name(VertexId v) const { return vertex_names_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    // Edge ids leaving v, in increasing edge-id order.
    const std::vector<int>& out_edges(VertexId v) const { return out_edges_[static_cast<size_t>(v)]; }
    // Edge ids entering v, sorted by increasing source vertex.
    const std::vector<int>& in_edges(VertexId v) const { return in_edges_[static_cast<size_t>(v)]; }

    int out_degree(VertexId v) const { return static_cast<int>(out_edges_[static_cast<size_t>(v)].size()); }

    std::optional<int> find_edge(VertexId source, VertexId target) const;

    // Loops found in the input, as (vertex, occurrence count) pairs.
    const std::vector<std::pair<VertexId, int>>& dropped_loops() const { return dropped_loops_; }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_edges_;
    std::vector<std::vector<int>> in_edges_;
    std::vector<std::pair<VertexId, int>> dropped_loops_;
};

bool is_strongly_connected(const DiGraph& g);

// Subgraph induced by w: keeps exactly the edges with both endpoints in w.
// Vertex order (and names) inherited from g; edges renumbered densely in the
// order they appear in g.  The mapping back to g is returned alongside.
struct InducedSubgraph {
    DiGraph graph;
    VertexSet vertices;           // original ids, ascending; position = new id
    std::vector<int> edge_ids;    // new edge id -> original edge id
};
InducedSubgraph induced_subgraph(const DiGraph& g, const VertexSet& w);

// All nonempty W such that the induced subgraph is strongly connected, in
// bitmask-ascending order (bit i = vertex i). Singletons count.
std::vector<VertexSet> strongly_connected_subsets(const DiGraph& g);

// Partition of x into strongly connected components of the induced subgraph,
// ordered by least vertex.
std::vector<VertexSet> scc_components(const DiGraph& g, const VertexSet& x);

// Set helpers (sets are sorted ascending).
bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_complement(int n, const VertexSet& s);
std::uint32_t set_to_mask(const VertexSet& s);
VertexSet mask_to_set(std::uint32_t mask);

}  // namespace treegraph

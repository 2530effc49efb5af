#pragma once

#include <string>
#include <vector>

#include "treegraph/digraph.hpp"
#include "treegraph/polynomial.hpp"

namespace treegraph {

// Directed multigraph: the arc list may repeat (source, target) pairs.
// Loops are dropped on ingest and recorded.
struct MultiDiGraph {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::vector<std::pair<VertexId, int>> dropped_loops;

    static MultiDiGraph make(std::vector<std::string> names,
                             const std::vector<std::pair<VertexId, VertexId>>& raw_arcs);
    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int arc_count() const { return static_cast<int>(arcs.size()); }
};

// Simple graph produced by putting a midpoint vertex on every arc. Midpoints
// follow the original vertices in the total order, in arc order. The in-half
// u -> m_e keeps the weight of e; the out-half m_e -> t(e) has unit weight.
struct Subdivision {
    MultiDiGraph original;
    DiGraph simple;
    struct ArcImage {
        VertexId midpoint = -1;
        int in_half = -1;   // edge id in `simple`
        int out_half = -1;  // edge id in `simple`
    };
    std::vector<ArcImage> arc_images;  // per original arc

    // Extends an assignment on the original arc weights to the subdivided
    // graph: in-halves inherit the arc value, out-halves evaluate to 1.
    Assignment lift_assignment(const std::vector<Rat>& arc_values) const;
};

Subdivision subdivide(const MultiDiGraph& mg);

// Spanning trees of a multigraph rooted at v, as arc-id choices per vertex.
std::vector<std::vector<int>> multigraph_trees(const MultiDiGraph& mg, VertexId root);

struct TransferReport {
    bool ok = true;
    VertexId root = -1;
    long original_count = 0;
    long subdivided_count = 0;
    std::vector<std::pair<int, long>> midpoint_counts;  // arc id (source = root) -> tree count at midpoint
    std::vector<std::string> problems;
};

// Verifies the tree bijection between the multigraph and its subdivision at
// an original root v: explicit edge-by-edge mapping, count equality, and the
// midpoint-root correspondence for arcs leaving v.
TransferReport transfer_trees(const Subdivision& sub, VertexId v);

}  // namespace treegraph

#pragma once

#include <map>
#include <string>
#include <vector>

#include "treegraph/digraph.hpp"
#include "treegraph/spanning.hpp"

namespace treegraph {

inline constexpr long kTreeGraphEdgeGuard = 1'000'000;

struct TreeGraphEdge {
    int src = -1;    // tree index
    int dst = -1;    // tree index
    int label = -1;  // edge id of the base graph (the projection of this edge)
};

// The derived graph whose vertices are the oriented spanning trees of the
// base graph. The edge a -> b exists when b is obtained from a by attaching
// an out-edge e of a's root and removing the out-edge of t(e); that edge
// carries the weight label e.
class TreeGraph {
public:
    static TreeGraph build(const DiGraph& g);

    const DiGraph& base() const { return base_; }
    const std::vector<SpanningTree>& trees() const { return trees_; }
    const SpanningTree& tree(int i) const { return trees_[static_cast<size_t>(i)]; }
    int tree_count() const { return static_cast<int>(trees_.size()); }
    const std::vector<TreeGraphEdge>& edges() const { return edges_; }

    VertexId root_of(int tree) const { return trees_[static_cast<size_t>(tree)].root; }
    int label_of(int tg_edge) const { return edges_[static_cast<size_t>(tg_edge)].label; }

    // The tree graph as a plain digraph (vertex i = tree i, edge ids aligned
    // with edges()).
    const DiGraph& graph() const { return graph_; }

    int index_of(const SpanningTree& t) const;

private:
    DiGraph base_;
    std::vector<SpanningTree> trees_;
    std::vector<TreeGraphEdge> edges_;
    DiGraph graph_;
    std::map<std::vector<int>, int> index_;
};

// The move defining tree-graph edges: b = a + e, minus the out-edge of t(e).
SpanningTree apply_tree_move(const DiGraph& g, const SpanningTree& a, int edge_id);

// Unique lift of a base path (list of edge ids) starting at the given tree;
// returns the traversed tree-graph edge ids. The lift exists and is unique
// by construction; a failure indicates a corrupted tree graph.
std::vector<int> check_covering(const TreeGraph& tg, const std::vector<int>& base_path, int start_tree);

struct LiftedCycle {
    std::vector<int> tg_edges;     // tree-graph edge ids, in cyclic order
    std::vector<int> base_cycle;   // projected simple cycle of G (edge ids, cyclic order)
    VertexSet base_vertices;       // vertex set of the projected cycle
};

// Partition of the tree-graph edge set into edge-disjoint simple cycles, each
// projecting bijectively onto a simple cycle of G. Grouping follows the
// correspondence (cycle, attached forest) -> lifted cycle.
std::vector<LiftedCycle> cycle_partition(const TreeGraph& tg);

struct EulerianReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks indeg(a) = outdeg(a) = outdeg_G(root(a)) for every tree a.
EulerianReport check_eulerian(const TreeGraph& tg);

}  // namespace treegraph

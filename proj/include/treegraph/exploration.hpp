#pragma once

#include <map>
#include <vector>

#include "treegraph/digraph.hpp"
#include "treegraph/spanning.hpp"

namespace treegraph {

struct ExplorationResult {
    VertexSet phi;      // explored vertices (terminal A)
    VertexSet psi;      // strongly connected component of the root inside phi
    VertexSet erased;   // vertices erased during the run
    VertexSet boundary; // vertices outside phi with an edge into phi
    std::vector<VertexId> discovery_order;   // accepted vertices, root first
    std::map<VertexId, int> erase_witness;   // erased vertex -> edge id processed
};

// The ordered breadth-first exploration with erasure. Vertices discovered
// along tree edges are accepted; a vertex discovered along a non-tree edge is
// erased together with all its incident edges. Accepting a vertex retires all
// of its outgoing edges, so an accepted vertex can never be erased later.
// All tie-breaking uses the graph's fixed vertex order. Passing
// compute_psi = false skips the final component computation (psi left empty);
// everything else is unchanged.
ExplorationResult explore(const DiGraph& g, const SpanningTree& a, bool compute_psi = true);

// The unique spanning tree rooted at v whose exploration accepts everything:
// breadth-first search along in-edges, keeping each vertex's first-discovery
// edge, scanning in increasing vertex order.
SpanningTree bfs_tree(const DiGraph& g, VertexId v);

struct MultiplicityEntry {
    VertexSet w;
    long m = 0;
    std::map<VertexId, long> per_root;             // m(W, w) for each w in W
    std::map<VertexId, std::vector<int>> witnesses; // w -> tree indices with psi = W
};

struct MultiplicityTable {
    std::vector<MultiplicityEntry> entries;  // one per strongly connected subset, bitmask-ascending
    long tree_count = 0;

    const MultiplicityEntry& entry_of(const VertexSet& w) const;
    long m_of(const VertexSet& w) const { return entry_of(w).m; }
    // sum of |W| * m(W); equals tree_count
    long degree_sum() const;
};

// Runs the exploration on every spanning tree and buckets by (psi, root).
// Validates that m(W, w) does not depend on w and that the degree identity
// holds; both are theorems, so a violation throws logic_error.
MultiplicityTable multiplicity_table(const DiGraph& g);
MultiplicityTable multiplicity_table(const DiGraph& g, const std::vector<SpanningTree>& trees);

// l(X) of the signed-sum multiplicity expression: the determinant of the
// unit-weight matrix -(Q+I) restricted to the complement of X.
Int athanasiadis_term(const DiGraph& g, const VertexSet& x);

// n(W) = sum of l(X) over all X having W as a strongly connected component.
// Equal to m(W); the two are computed by entirely different routes.
long athanasiadis_multiplicity(const DiGraph& g, const VertexSet& w);

}  // namespace treegraph

#pragma once

#include <cstdint>
#include <vector>

#include "treegraph/digraph.hpp"
#include "treegraph/polynomial.hpp"

namespace treegraph {

inline constexpr long kTreeEnumerationGuard = 1'000'000;

// Oriented spanning tree: the root has outdegree 0, every other vertex has
// exactly one out-edge, and every out-edge chain reaches the root.
struct SpanningTree {
    VertexId root = -1;
    std::vector<int> out_edge;  // per vertex, edge id; -1 at the root

    bool contains_edge(const Edge& e) const {
        return out_edge[static_cast<size_t>(e.source)] == e.id;
    }
    std::vector<int> sorted_edge_ids() const;
    bool operator==(const SpanningTree& o) const = default;
};

// Oriented forest rooted in a vertex set W: vertices of W have outdegree 0.
struct Forest {
    VertexSet roots;
    std::vector<int> out_edge;  // per vertex, edge id; -1 at roots

    std::vector<int> sorted_edge_ids() const;
    bool operator==(const Forest& o) const = default;
};

// Enumerates the out-edge maps of all forests rooted in `roots`, depth-first
// over out-edge choices with on-line cycle detection. The callback receives
// the out_edge array (-1 at roots); it must copy what it keeps.
template <typename Fn>
void visit_forests(const DiGraph& g, const VertexSet& roots, Fn&& fn) {
    const int n = g.vertex_count();
    std::vector<VertexId> choosers;
    for (VertexId v = 0; v < n; ++v)
        if (!set_contains(roots, v)) choosers.push_back(v);
    std::vector<int> out_edge(static_cast<size_t>(n), -1);

    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == choosers.size()) {
            fn(const_cast<const std::vector<int>&>(out_edge));
            return;
        }
        VertexId v = choosers[i];
        for (int eid : g.out_edges(v)) {
            // walk the already-assigned chain from the target; a cycle would
            // have to come back to v
            VertexId cur = g.edge(eid).target;
            while (cur != v && out_edge[static_cast<size_t>(cur)] != -1)
                cur = g.edge(out_edge[static_cast<size_t>(cur)]).target;
            if (cur == v) continue;
            out_edge[static_cast<size_t>(v)] = eid;
            self(self, i + 1);
            out_edge[static_cast<size_t>(v)] = -1;
        }
    };
    rec(rec, 0);
}

// All oriented spanning trees over all roots, in canonical order:
// (root index, sorted edge-id tuple) lexicographic.
std::vector<SpanningTree> enumerate_spanning_trees(const DiGraph& g);

// All forests rooted in w, ordered by sorted edge-id tuple. w = V yields the
// single empty forest.
std::vector<Forest> enumerate_forests(const DiGraph& g, const VertexSet& w);

// Counts spanning trees without materializing them, stopping early once the
// count exceeds `limit` (returns limit + 1 in that case).
long count_spanning_trees(const DiGraph& g, long limit = kTreeEnumerationGuard);

Monomial tree_weight(const SpanningTree& a);
Monomial forest_weight(const Forest& f);

MultiPoly generating_polynomial(const std::vector<Monomial>& weights);

// F_G: sum of tree weights over all spanning trees.
MultiPoly spanning_tree_polynomial(const DiGraph& g);
// Psi_W: sum of forest weights over forests rooted in w.
MultiPoly forest_polynomial(const DiGraph& g, const VertexSet& w);

}  // namespace treegraph

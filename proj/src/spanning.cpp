#include "treegraph/spanning.hpp"

#include <algorithm>

namespace treegraph {

std::vector<int> SpanningTree::sorted_edge_ids() const {
    std::vector<int> ids;
    ids.reserve(out_edge.size());
    for (int e : out_edge)
        if (e >= 0) ids.push_back(e);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> Forest::sorted_edge_ids() const {
    std::vector<int> ids;
    for (int e : out_edge)
        if (e >= 0) ids.push_back(e);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<SpanningTree> enumerate_spanning_trees(const DiGraph& g) {
    std::vector<SpanningTree> trees;
    long count = 0;
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
        visit_forests(g, {r}, [&](const std::vector<int>& out_edge) {
            if (++count > kTreeEnumerationGuard) throw GuardError("spanning tree enumeration limit");
            trees.push_back(SpanningTree{r, out_edge});
        });
    }
    std::stable_sort(trees.begin(), trees.end(), [](const SpanningTree& a, const SpanningTree& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.sorted_edge_ids() < b.sorted_edge_ids();
    });
    return trees;
}

std::vector<Forest> enumerate_forests(const DiGraph& g, const VertexSet& w) {
    if (w.empty()) throw InputError("empty root set");
    for (VertexId v : w)
        if (v < 0 || v >= g.vertex_count()) throw InputError("root out of range");
    std::vector<Forest> forests;
    long count = 0;
    visit_forests(g, w, [&](const std::vector<int>& out_edge) {
        if (++count > kTreeEnumerationGuard) throw GuardError("forest enumeration limit");
        forests.push_back(Forest{w, out_edge});
    });
    std::stable_sort(forests.begin(), forests.end(), [](const Forest& a, const Forest& b) {
        return a.sorted_edge_ids() < b.sorted_edge_ids();
    });
    return forests;
}

long count_spanning_trees(const DiGraph& g, long limit) {
    long count = 0;
    struct Stop {};
    try {
        for (VertexId r = 0; r < g.vertex_count(); ++r) {
            visit_forests(g, {r}, [&](const std::vector<int>&) {
                if (++count > limit) throw Stop{};
            });
        }
    } catch (const Stop&) {
        return limit + 1;
    }
    return count;
}

Monomial tree_weight(const SpanningTree& a) {
    Monomial m;
    for (int e : a.sorted_edge_ids()) m = m * Monomial::var(x_var(e));
    return m;
}

Monomial forest_weight(const Forest& f) {
    Monomial m;
    for (int e : f.sorted_edge_ids()) m = m * Monomial::var(x_var(e));
    return m;
}

MultiPoly generating_polynomial(const std::vector<Monomial>& weights) {
    MultiPoly p;
    for (const Monomial& m : weights) p += MultiPoly::monomial(m, Rat(1));
    return p;
}

MultiPoly spanning_tree_polynomial(const DiGraph& g) {
    MultiPoly p;
    for (const SpanningTree& a : enumerate_spanning_trees(g))
        p += MultiPoly::monomial(tree_weight(a), Rat(1));
    return p;
}

MultiPoly forest_polynomial(const DiGraph& g, const VertexSet& w) {
    MultiPoly p;
    for (const Forest& f : enumerate_forests(g, w))
        p += MultiPoly::monomial(forest_weight(f), Rat(1));
    return p;
}

}  // namespace treegraph

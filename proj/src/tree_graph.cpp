#include "treegraph/tree_graph.hpp"

#include <algorithm>
#include <set>

namespace treegraph {

SpanningTree apply_tree_move(const DiGraph& g, const SpanningTree& a, int edge_id) {
    const Edge& e = g.edge(edge_id);
    if (e.source != a.root) throw InputError("move edge does not leave the root");
    SpanningTree b = a;
    b.out_edge[static_cast<size_t>(e.source)] = edge_id;
    b.out_edge[static_cast<size_t>(e.target)] = -1;
    b.root = e.target;
    return b;
}

TreeGraph TreeGraph::build(const DiGraph& g) {
    TreeGraph tg;
    tg.base_ = g;
    tg.trees_ = enumerate_spanning_trees(g);
    if (tg.trees_.empty()) throw InputError("G has no arborescence");
    for (size_t i = 0; i < tg.trees_.size(); ++i)
        tg.index_.emplace(tg.trees_[i].out_edge, static_cast<int>(i));

    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < tg.tree_count(); ++i) {
        const SpanningTree& a = tg.trees_[static_cast<size_t>(i)];
        for (int eid : g.out_edges(a.root)) {
            SpanningTree b = apply_tree_move(g, a, eid);
            auto it = tg.index_.find(b.out_edge);
            if (it == tg.index_.end()) throw std::logic_error("tree move left the spanning tree set");
            int j = it->second;
            if (j == i) throw std::logic_error("tree graph grew a loop");
            if (!seen.insert({i, j}).second) throw std::logic_error("tree graph grew a parallel edge");
            tg.edges_.push_back(TreeGraphEdge{i, j, eid});
            if (static_cast<long>(tg.edges_.size()) > kTreeGraphEdgeGuard)
                throw GuardError("tree graph edge limit");
        }
    }

    std::vector<std::string> names;
    names.reserve(tg.trees_.size());
    for (int i = 0; i < tg.tree_count(); ++i) names.push_back("t" + std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(tg.edges_.size());
    for (const TreeGraphEdge& e : tg.edges_) arcs.emplace_back(e.src, e.dst);
    tg.graph_ = DiGraph::make(std::move(names), arcs);
    return tg;
}

int TreeGraph::index_of(const SpanningTree& t) const {
    auto it = index_.find(t.out_edge);
    if (it == index_.end()) throw InputError("not a spanning tree of this graph");
    return it->second;
}

std::vector<int> check_covering(const TreeGraph& tg, const std::vector<int>& base_path, int start_tree) {
    std::vector<int> lift;
    int cur = start_tree;
    for (size_t k = 0; k < base_path.size(); ++k) {
        int eid = base_path[k];
        const Edge& e = tg.base().edge(eid);
        if (e.source != tg.root_of(cur))
            throw InputError(k == 0 ? "path does not start at the root of the start tree"
                                    : "base edge list is not a path");
        int found = -1;
        for (int out : tg.graph().out_edges(cur)) {
            if (tg.label_of(out) == eid) {
                if (found != -1) throw std::logic_error("lift not unique");
                found = out;
            }
        }
        if (found == -1) throw std::logic_error("lift does not exist");
        lift.push_back(found);
        cur = tg.edges()[static_cast<size_t>(found)].dst;
    }
    return lift;
}

namespace {

// The simple cycle of G determined by a tree-graph edge a -> b with label e:
// the path in a from t(e) up to root(a), followed by e itself.
std::vector<int> base_cycle_of(const TreeGraph& tg, const TreeGraphEdge& edge) {
    const DiGraph& g = tg.base();
    const SpanningTree& a = tg.trees()[static_cast<size_t>(edge.src)];
    std::vector<int> cycle;
    VertexId v = g.edge(edge.label).target;
    while (v != a.root) {
        int eid = a.out_edge[static_cast<size_t>(v)];
        cycle.push_back(eid);
        v = g.edge(eid).target;
    }
    cycle.push_back(edge.label);
    return cycle;
}

}  // namespace

std::vector<LiftedCycle> cycle_partition(const TreeGraph& tg) {
    const DiGraph& g = tg.base();

    // key: (sorted cycle edge ids, sorted attached-forest edge ids)
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> groups;
    std::vector<std::vector<int>> cycle_of_edge(tg.edges().size());
    for (size_t idx = 0; idx < tg.edges().size(); ++idx) {
        const TreeGraphEdge& e = tg.edges()[idx];
        std::vector<int> cyc = base_cycle_of(tg, e);
        std::vector<int> cyc_sorted = cyc;
        std::sort(cyc_sorted.begin(), cyc_sorted.end());
        std::vector<int> forest;
        for (int teid : tg.trees()[static_cast<size_t>(e.src)].sorted_edge_ids())
            if (!std::binary_search(cyc_sorted.begin(), cyc_sorted.end(), teid)) forest.push_back(teid);
        groups[{std::move(cyc_sorted), std::move(forest)}].push_back(static_cast<int>(idx));
        cycle_of_edge[idx] = std::move(cyc);
    }

    std::vector<LiftedCycle> cycles;
    for (auto& [key, members] : groups) {
        const size_t len = key.first.size();
        if (members.size() != len) throw std::logic_error("lifted cycle has wrong length");
        std::map<int, int> next;  // src tree -> tg edge id within the group
        for (int idx : members) {
            if (!next.emplace(tg.edges()[static_cast<size_t>(idx)].src, idx).second)
                throw std::logic_error("lifted cycle revisits a tree");
        }
        LiftedCycle lc;
        int start = *std::min_element(members.begin(), members.end());
        int cur = start;
        for (size_t step = 0; step < len; ++step) {
            lc.tg_edges.push_back(cur);
            lc.base_cycle.push_back(tg.label_of(cur));
            int dst = tg.edges()[static_cast<size_t>(cur)].dst;
            auto it = next.find(dst);
            if (it == next.end()) throw std::logic_error("lifted cycle is not closed");
            cur = it->second;
        }
        if (cur != start) throw std::logic_error("lifted cycle is not closed");
        VertexSet verts;
        for (int eid : lc.base_cycle) verts.push_back(g.edge(eid).source);
        std::sort(verts.begin(), verts.end());
        lc.base_vertices = std::move(verts);
        cycles.push_back(std::move(lc));
    }
    std::sort(cycles.begin(), cycles.end(), [](const LiftedCycle& a, const LiftedCycle& b) {
        return a.tg_edges.front() < b.tg_edges.front();
    });
    return cycles;
}

EulerianReport check_eulerian(const TreeGraph& tg) {
    EulerianReport rep;
    std::vector<int> indeg(tg.trees().size(), 0);
    for (const TreeGraphEdge& e : tg.edges()) ++indeg[static_cast<size_t>(e.dst)];
    for (int i = 0; i < tg.tree_count(); ++i) {
        int expected = tg.base().out_degree(tg.root_of(i));
        int out = static_cast<int>(tg.graph().out_edges(i).size());
        int in = indeg[static_cast<size_t>(i)];
        if (out != expected || in != expected) {
            rep.ok = false;
            rep.violations.push_back("tree " + std::to_string(i) + ": in=" + std::to_string(in) +
                                     " out=" + std::to_string(out) +
                                     " expected=" + std::to_string(expected));
        }
    }
    return rep;
}

}  // namespace treegraph

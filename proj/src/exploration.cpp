#include "treegraph/exploration.hpp"

#include <algorithm>

#include "treegraph/matrix.hpp"

namespace treegraph {

namespace {

struct ExploreScratch {
    std::vector<char> status;   // 0 untouched, 1 accepted, 2 erased
    std::vector<char> in_list;  // edge currently alive in L
    std::vector<char> in_f;     // edge currently in F
    std::vector<int> list;      // L, consumed from the front
};

thread_local ExploreScratch scratch;

// strongly connected component of `root` within the vertices marked in
// `status` as accepted, via forward/backward reachability
VertexSet component_of_root(const DiGraph& g, const std::vector<char>& status, VertexId root) {
    const int n = g.vertex_count();
    std::vector<char> fwd(static_cast<size_t>(n), 0), bwd(static_cast<size_t>(n), 0);
    std::vector<VertexId> stack{root};
    fwd[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (int eid : g.out_edges(v)) {
            VertexId w = g.edge(eid).target;
            if (status[static_cast<size_t>(w)] == 1 && !fwd[static_cast<size_t>(w)]) {
                fwd[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    stack.push_back(root);
    bwd[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (int eid : g.in_edges(v)) {
            VertexId w = g.edge(eid).source;
            if (status[static_cast<size_t>(w)] == 1 && !bwd[static_cast<size_t>(w)]) {
                bwd[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    VertexSet psi;
    for (VertexId v = 0; v < n; ++v)
        if (fwd[static_cast<size_t>(v)] && bwd[static_cast<size_t>(v)]) psi.push_back(v);
    return psi;
}

}  // namespace

ExplorationResult explore(const DiGraph& g, const SpanningTree& a, bool compute_psi) {
    const int n = g.vertex_count();
    const int ne = g.edge_count();
    if (static_cast<int>(a.out_edge.size()) != n || a.root < 0 || a.root >= n ||
        a.out_edge[static_cast<size_t>(a.root)] != -1)
        throw InputError("not a spanning tree of this graph");
    for (VertexId v = 0; v < n; ++v) {
        if (v == a.root) continue;
        int eid = a.out_edge[static_cast<size_t>(v)];
        if (eid < 0 || eid >= ne || g.edge(eid).source != v)
            throw InputError("not a spanning tree of this graph");
    }

    auto& st = scratch;
    st.status.assign(static_cast<size_t>(n), 0);
    st.in_list.assign(static_cast<size_t>(ne), 0);
    st.in_f.assign(static_cast<size_t>(ne), 0);
    st.list.clear();

    ExplorationResult res;
    const VertexId root = a.root;
    st.status[static_cast<size_t>(root)] = 1;
    res.discovery_order.push_back(root);
    for (int e = 0; e < ne; ++e) st.in_f[static_cast<size_t>(e)] = (g.edge(e).source != root);
    for (int eid : g.in_edges(root)) {  // already sorted by increasing source
        st.list.push_back(eid);
        st.in_list[static_cast<size_t>(eid)] = 1;
        st.in_f[static_cast<size_t>(eid)] = 0;
    }

    size_t head = 0;
    while (head < st.list.size()) {
        int eid = st.list[head++];
        if (!st.in_list[static_cast<size_t>(eid)]) continue;
        st.in_list[static_cast<size_t>(eid)] = 0;
        const VertexId w = g.edge(eid).source;

        if (a.out_edge[static_cast<size_t>(w)] == eid) {
            // tree edge: accept w, retire its outgoing edges, then pull the
            // remaining F-edges aimed at w into L (increasing source)
            st.status[static_cast<size_t>(w)] = 1;
            res.discovery_order.push_back(w);
            for (int out : g.out_edges(w)) {
                st.in_list[static_cast<size_t>(out)] = 0;
                st.in_f[static_cast<size_t>(out)] = 0;
            }
            for (int in : g.in_edges(w)) {
                if (st.in_f[static_cast<size_t>(in)]) {
                    st.in_f[static_cast<size_t>(in)] = 0;
                    st.in_list[static_cast<size_t>(in)] = 1;
                    st.list.push_back(in);
                }
            }
        } else {
            // non-tree edge: erase w and everything incident to it
            st.status[static_cast<size_t>(w)] = 2;
            res.erase_witness.emplace(w, eid);
            for (int out : g.out_edges(w)) {
                st.in_list[static_cast<size_t>(out)] = 0;
                st.in_f[static_cast<size_t>(out)] = 0;
            }
            for (int in : g.in_edges(w)) {
                st.in_list[static_cast<size_t>(in)] = 0;
                st.in_f[static_cast<size_t>(in)] = 0;
            }
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        if (st.status[static_cast<size_t>(v)] == 1) res.phi.push_back(v);
        if (st.status[static_cast<size_t>(v)] == 2) res.erased.push_back(v);
    }
    if (compute_psi) res.psi = component_of_root(g, st.status, root);
    for (VertexId v = 0; v < n; ++v) {
        if (st.status[static_cast<size_t>(v)] == 1) continue;
        bool hits_phi = false;
        for (int eid : g.out_edges(v))
            if (st.status[static_cast<size_t>(g.edge(eid).target)] == 1) {
                hits_phi = true;
                break;
            }
        if (hits_phi) res.boundary.push_back(v);
    }
    return res;
}

SpanningTree bfs_tree(const DiGraph& g, VertexId v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw InputError("root out of range");
    SpanningTree tree;
    tree.root = v;
    tree.out_edge.assign(static_cast<size_t>(n), -1);
    std::vector<char> discovered(static_cast<size_t>(n), 0);
    discovered[static_cast<size_t>(v)] = 1;
    std::vector<VertexId> queue{v};
    size_t head = 0;
    while (head < queue.size()) {
        VertexId w = queue[head++];
        for (int eid : g.in_edges(w)) {  // increasing source order
            VertexId u = g.edge(eid).source;
            if (!discovered[static_cast<size_t>(u)]) {
                discovered[static_cast<size_t>(u)] = 1;
                tree.out_edge[static_cast<size_t>(u)] = eid;
                queue.push_back(u);
            }
        }
    }
    if (static_cast<int>(queue.size()) != n)
        throw InputError("graph is not strongly connected: some vertex cannot reach " +
                         g.vertex_name(v));
    return tree;
}

const MultiplicityEntry& MultiplicityTable::entry_of(const VertexSet& w) const {
    for (const auto& e : entries)
        if (e.w == w) return e;
    throw InputError("subset is not strongly connected");
}

long MultiplicityTable::degree_sum() const {
    long s = 0;
    for (const auto& e : entries) s += static_cast<long>(e.w.size()) * e.m;
    return s;
}

MultiplicityTable multiplicity_table(const DiGraph& g) {
    return multiplicity_table(g, enumerate_spanning_trees(g));
}

MultiplicityTable multiplicity_table(const DiGraph& g, const std::vector<SpanningTree>& trees) {
    if (!is_strongly_connected(g)) throw InputError("multiplicity table requires a strongly connected graph");
    MultiplicityTable table;
    table.tree_count = static_cast<long>(trees.size());

    std::map<std::uint32_t, size_t> by_mask;
    for (const VertexSet& w : strongly_connected_subsets(g)) {
        by_mask.emplace(set_to_mask(w), table.entries.size());
        MultiplicityEntry e;
        e.w = w;
        for (VertexId v : w) e.per_root.emplace(v, 0);
        table.entries.push_back(std::move(e));
    }

    for (size_t i = 0; i < trees.size(); ++i) {
        ExplorationResult res = explore(g, trees[i]);
        auto it = by_mask.find(set_to_mask(res.psi));
        if (it == by_mask.end()) throw std::logic_error("psi is not strongly connected");
        MultiplicityEntry& e = table.entries[it->second];
        ++e.per_root[trees[i].root];
        e.witnesses[trees[i].root].push_back(static_cast<int>(i));
    }

    for (MultiplicityEntry& e : table.entries) {
        long common = e.per_root.begin()->second;
        for (auto& [w, c] : e.per_root)
            if (c != common)
                throw std::logic_error("multiplicity depends on the base point within " +
                                       std::to_string(set_to_mask(e.w)));
        e.m = common;
    }
    if (table.degree_sum() != table.tree_count)
        throw std::logic_error("degree identity violated: sum |W| m(W) != tree count");
    return table;
}

Int athanasiadis_term(const DiGraph& g, const VertexSet& x) {
    const VertexSet rest = set_complement(g.vertex_count(), x);
    Mat<Int> m(static_cast<int>(rest.size()));
    for (size_t i = 0; i < rest.size(); ++i) {
        m.at(static_cast<int>(i), static_cast<int>(i)) = g.out_degree(rest[i]) - 1;
        for (size_t j = 0; j < rest.size(); ++j)
            if (i != j && g.find_edge(rest[i], rest[j]))
                m.at(static_cast<int>(i), static_cast<int>(j)) = -1;
    }
    return det_int(std::move(m));
}

long athanasiadis_multiplicity(const DiGraph& g, const VertexSet& w) {
    const int n = g.vertex_count();
    if (n > kSubsetEnumerationGuard) throw GuardError("subset enumeration limit");
    auto comps = scc_components(g, w);
    if (comps.size() != 1 || comps.front() != w)
        throw InputError("subset is not strongly connected");

    const std::uint32_t w_mask = set_to_mask(w);
    const std::uint32_t full = (1u << n) - 1;
    const std::uint32_t other = full & ~w_mask;
    Int total(0);
    // enumerate supersets X of W
    std::uint32_t extra = 0;
    while (true) {
        std::uint32_t x_mask = w_mask | extra;
        VertexSet x = mask_to_set(x_mask);
        bool w_is_component = false;
        for (const VertexSet& c : scc_components(g, x))
            if (c == w) {
                w_is_component = true;
                break;
            }
        if (w_is_component) total += athanasiadis_term(g, x);
        if (extra == other) break;
        extra = (extra - other) & other;  // next subset of `other`
    }
    if (!total.fits_slong_p()) throw GuardError("multiplicity overflow");
    return total.get_si();
}

}  // namespace treegraph

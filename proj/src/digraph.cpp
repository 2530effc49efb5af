#include "treegraph/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treegraph {

DiGraph DiGraph::make(std::vector<std::string> vertex_names,
                      const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    DiGraph g;
    g.vertex_names_ = std::move(vertex_names);
    const int n = g.vertex_count();
    g.out_edges_.assign(static_cast<size_t>(n), {});
    g.in_edges_.assign(static_cast<size_t>(n), {});

    std::map<VertexId, int> loop_counts;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [s, t] : arcs) {
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(s) + "," +
                             std::to_string(t) + ")");
        if (s == t) {
            ++loop_counts[s];
            continue;
        }
        if (!seen.insert({s, t}).second)
            throw InputError("parallel edge (" + std::to_string(s) + "," + std::to_string(t) +
                             "); use the multigraph pipeline");
        Edge e;
        e.id = static_cast<int>(g.edges_.size());
        e.source = s;
        e.target = t;
        g.out_edges_[static_cast<size_t>(s)].push_back(e.id);
        g.in_edges_[static_cast<size_t>(t)].push_back(e.id);
        g.edges_.push_back(e);
    }
    for (auto& [v, c] : loop_counts) g.dropped_loops_.emplace_back(v, c);

    // in-edges sorted by source vertex; sources are distinct in a simple graph.
    for (auto& ins : g.in_edges_) {
        std::sort(ins.begin(), ins.end(), [&](int a, int b) {
            return g.edges_[static_cast<size_t>(a)].source < g.edges_[static_cast<size_t>(b)].source;
        });
    }
    return g;
}

std::optional<int> DiGraph::find_edge(VertexId source, VertexId target) const {
    for (int id : out_edges_[static_cast<size_t>(source)])
        if (edges_[static_cast<size_t>(id)].target == target) return id;
    return std::nullopt;
}

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_complement(int n, const VertexSet& s) {
    VertexSet out;
    out.reserve(static_cast<size_t>(n) - s.size());
    for (VertexId v = 0; v < n; ++v)
        if (!set_contains(s, v)) out.push_back(v);
    return out;
}

std::uint32_t set_to_mask(const VertexSet& s) {
    std::uint32_t m = 0;
    for (VertexId v : s) m |= 1u << v;
    return m;
}

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet s;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) s.push_back(v);
    return s;
}

namespace {

// Kosaraju on the subgraph induced by `inside` (indexed by original ids).
std::vector<VertexSet> scc_of_subset(const DiGraph& g, const std::vector<char>& inside) {
    const int n = g.vertex_count();
    std::vector<VertexId> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);

    for (VertexId start = 0; start < n; ++start) {
        if (!inside[static_cast<size_t>(start)] || seen[static_cast<size_t>(start)]) continue;
        // iterative DFS, postorder
        std::vector<std::pair<VertexId, size_t>> stack{{start, 0}};
        seen[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            auto& top = stack.back();
            const VertexId v = top.first;
            const auto& outs = g.out_edges(v);
            if (top.second < outs.size()) {
                VertexId w = g.edge(outs[top.second]).target;
                ++top.second;
                if (inside[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }

    std::vector<VertexSet> comps;
    std::vector<char> assigned(static_cast<size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (assigned[static_cast<size_t>(*it)]) continue;
        VertexSet comp;
        std::vector<VertexId> stack{*it};
        assigned[static_cast<size_t>(*it)] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int eid : g.in_edges(v)) {
                VertexId u = g.edge(eid).source;
                if (inside[static_cast<size_t>(u)] && !assigned[static_cast<size_t>(u)]) {
                    assigned[static_cast<size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return comps;
}

}  // namespace

bool is_strongly_connected(const DiGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> inside(static_cast<size_t>(n), 1);
    return scc_of_subset(g, inside).size() == 1;
}

InducedSubgraph induced_subgraph(const DiGraph& g, const VertexSet& w) {
    if (w.empty()) throw InputError("empty subset");
    const int n = g.vertex_count();
    std::vector<int> new_id(static_cast<size_t>(n), -1);
    std::vector<std::string> names;
    names.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        VertexId v = w[i];
        if (v < 0 || v >= n) throw InputError("subset vertex out of range");
        if (new_id[static_cast<size_t>(v)] != -1) throw InputError("duplicate vertex in subset");
        new_id[static_cast<size_t>(v)] = static_cast<int>(i);
        names.push_back(g.vertex_name(v));
    }
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::vector<int> edge_ids;
    for (const Edge& e : g.edges()) {
        int s = new_id[static_cast<size_t>(e.source)];
        int t = new_id[static_cast<size_t>(e.target)];
        if (s != -1 && t != -1) {
            arcs.emplace_back(s, t);
            edge_ids.push_back(e.id);
        }
    }
    InducedSubgraph out;
    out.graph = DiGraph::make(std::move(names), arcs);
    out.vertices = w;
    out.edge_ids = std::move(edge_ids);
    return out;
}

std::vector<VertexSet> scc_components(const DiGraph& g, const VertexSet& x) {
    if (x.empty()) return {};
    std::vector<char> inside(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : x) {
        if (v < 0 || v >= g.vertex_count()) throw InputError("subset vertex out of range");
        inside[static_cast<size_t>(v)] = 1;
    }
    return scc_of_subset(g, inside);
}

std::vector<VertexSet> strongly_connected_subsets(const DiGraph& g) {
    const int n = g.vertex_count();
    if (n > kSubsetEnumerationGuard)
        throw GuardError("subset enumeration limit: |V|=" + std::to_string(n) + " > " +
                         std::to_string(kSubsetEnumerationGuard));
    std::vector<VertexSet> result;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet w = mask_to_set(mask);
        auto comps = scc_components(g, w);
        if (comps.size() == 1 && comps.front().size() == w.size()) result.push_back(std::move(w));
    }
    return result;
}

}  // namespace treegraph

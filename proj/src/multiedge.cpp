#include "treegraph/multiedge.hpp"

#include <algorithm>
#include <map>

#include "treegraph/spanning.hpp"

namespace treegraph {

MultiDiGraph MultiDiGraph::make(std::vector<std::string> names,
                                const std::vector<std::pair<VertexId, VertexId>>& raw_arcs) {
    MultiDiGraph mg;
    mg.vertex_names = std::move(names);
    const int n = mg.vertex_count();
    std::map<VertexId, int> loops;
    for (auto& [s, t] : raw_arcs) {
        if (s < 0 || s >= n || t < 0 || t >= n) throw InputError("arc endpoint out of range");
        if (s == t) {
            ++loops[s];
            continue;
        }
        mg.arcs.emplace_back(s, t);
    }
    for (auto& [v, c] : loops) mg.dropped_loops.emplace_back(v, c);
    return mg;
}

Subdivision subdivide(const MultiDiGraph& mg) {
    Subdivision sub;
    sub.original = mg;
    const int n = mg.vertex_count();
    std::vector<std::string> names = mg.vertex_names;
    for (int a = 0; a < mg.arc_count(); ++a) {
        const auto& [s, t] = mg.arcs[static_cast<size_t>(a)];
        names.push_back("m" + std::to_string(a) + "(" + mg.vertex_names[static_cast<size_t>(s)] +
                        ">" + mg.vertex_names[static_cast<size_t>(t)] + ")");
    }
    std::vector<std::pair<VertexId, VertexId>> arcs;
    sub.arc_images.resize(static_cast<size_t>(mg.arc_count()));
    for (int a = 0; a < mg.arc_count(); ++a) {
        const auto& [s, t] = mg.arcs[static_cast<size_t>(a)];
        VertexId mid = n + a;
        sub.arc_images[static_cast<size_t>(a)].midpoint = mid;
        sub.arc_images[static_cast<size_t>(a)].in_half = static_cast<int>(arcs.size());
        arcs.emplace_back(s, mid);
        sub.arc_images[static_cast<size_t>(a)].out_half = static_cast<int>(arcs.size());
        arcs.emplace_back(mid, t);
    }
    sub.simple = DiGraph::make(std::move(names), arcs);
    return sub;
}

Assignment Subdivision::lift_assignment(const std::vector<Rat>& arc_values) const {
    if (arc_values.size() != arc_images.size())
        throw InputError("arc value count does not match the multigraph");
    Assignment a;
    for (size_t i = 0; i < arc_images.size(); ++i) {
        a[x_var(arc_images[i].in_half)] = arc_values[i];
        a[x_var(arc_images[i].out_half)] = 1;
    }
    return a;
}

std::vector<std::vector<int>> multigraph_trees(const MultiDiGraph& mg, VertexId root) {
    const int n = mg.vertex_count();
    if (root < 0 || root >= n) throw InputError("root out of range");
    std::vector<std::vector<int>> out_arcs(static_cast<size_t>(n));
    for (int a = 0; a < mg.arc_count(); ++a)
        out_arcs[static_cast<size_t>(mg.arcs[static_cast<size_t>(a)].first)].push_back(a);

    std::vector<VertexId> choosers;
    for (VertexId v = 0; v < n; ++v)
        if (v != root) choosers.push_back(v);

    std::vector<std::vector<int>> trees;
    std::vector<int> choice(static_cast<size_t>(n), -1);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == choosers.size()) {
            trees.push_back(choice);
            return;
        }
        VertexId v = choosers[i];
        for (int a : out_arcs[static_cast<size_t>(v)]) {
            VertexId cur = mg.arcs[static_cast<size_t>(a)].second;
            while (cur != v && choice[static_cast<size_t>(cur)] != -1)
                cur = mg.arcs[static_cast<size_t>(choice[static_cast<size_t>(cur)])].second;
            if (cur == v) continue;
            choice[static_cast<size_t>(v)] = a;
            self(self, i + 1);
            choice[static_cast<size_t>(v)] = -1;
        }
    };
    rec(rec, 0);
    return trees;
}

TransferReport transfer_trees(const Subdivision& sub, VertexId v) {
    TransferReport rep;
    rep.root = v;
    const MultiDiGraph& mg = sub.original;
    const int n = mg.vertex_count();
    if (v < 0 || v >= n) throw InputError("root is not an original vertex");

    auto original = multigraph_trees(mg, v);
    rep.original_count = static_cast<long>(original.size());

    std::vector<SpanningTree> subdivided;
    visit_forests(sub.simple, {v}, [&](const std::vector<int>& out_edge) {
        subdivided.push_back(SpanningTree{v, out_edge});
    });
    rep.subdivided_count = static_cast<long>(subdivided.size());

    std::map<std::vector<int>, int> sub_index;
    for (size_t i = 0; i < subdivided.size(); ++i) sub_index.emplace(subdivided[i].out_edge, 0);
    if (sub_index.size() != subdivided.size()) {
        rep.ok = false;
        rep.problems.push_back("duplicate trees in the subdivision enumeration");
    }

    // image of an original tree: chosen arcs route through their in-half,
    // every midpoint keeps its out-half
    for (const auto& choice : original) {
        std::vector<int> image(sub.simple.vertex_count(), -1);
        for (VertexId u = 0; u < n; ++u) {
            if (u == v) continue;
            image[static_cast<size_t>(u)] = sub.arc_images[static_cast<size_t>(choice[static_cast<size_t>(u)])].in_half;
        }
        for (int a = 0; a < mg.arc_count(); ++a)
            image[static_cast<size_t>(sub.arc_images[static_cast<size_t>(a)].midpoint)] =
                sub.arc_images[static_cast<size_t>(a)].out_half;
        auto it = sub_index.find(image);
        if (it == sub_index.end()) {
            rep.ok = false;
            rep.problems.push_back("image of an original tree is not a subdivided tree");
        } else if (++it->second > 1) {
            rep.ok = false;
            rep.problems.push_back("tree mapping is not injective");
        }
    }
    if (rep.original_count != rep.subdivided_count) {
        rep.ok = false;
        rep.problems.push_back("tree counts differ: " + std::to_string(rep.original_count) + " vs " +
                               std::to_string(rep.subdivided_count));
    }

    // midpoints sitting on arcs out of v root as many trees as v itself
    for (int a = 0; a < mg.arc_count(); ++a) {
        if (mg.arcs[static_cast<size_t>(a)].first != v) continue;
        long count = 0;
        visit_forests(sub.simple, {sub.arc_images[static_cast<size_t>(a)].midpoint},
                      [&](const std::vector<int>&) { ++count; });
        rep.midpoint_counts.emplace_back(a, count);
        if (count != rep.original_count) {
            rep.ok = false;
            rep.problems.push_back("midpoint of arc " + std::to_string(a) + " roots " +
                                   std::to_string(count) + " trees, expected " +
                                   std::to_string(rep.original_count));
        }
    }
    return rep;
}

}  // namespace treegraph

#include <doctest.h>

#include <map>
#include <set>

#include "treegraph/builtins.hpp"
#include "treegraph/random_graphs.hpp"
#include "treegraph/tree_graph.hpp"

using namespace treegraph;

namespace {

DiGraph make_graph(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    return DiGraph::make(names, arcs);
}

}  // namespace

TEST_CASE("tree graph of the directed 3-cycle is a directed 3-cycle") {
    DiGraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    TreeGraph tg = TreeGraph::build(g);
    REQUIRE(tg.tree_count() == 3);
    REQUIRE(tg.edges().size() == 3);
    // each tree has one outgoing move, to the tree rooted at the next vertex
    for (const TreeGraphEdge& e : tg.edges()) {
        CHECK(tg.root_of(e.dst) == (tg.root_of(e.src) + 1) % 3);
        CHECK(g.edge(e.label).source == tg.root_of(e.src));
    }
    CHECK(is_strongly_connected(tg.graph()));
}

TEST_CASE("tree graph sizes and degrees") {
    SUBCASE("bidirected triangle") {
        TreeGraph tg = TreeGraph::build(cycle_graph(3));
        CHECK(tg.tree_count() == 9);
        CHECK(tg.edges().size() == 18);
        for (int i = 0; i < tg.tree_count(); ++i)
            CHECK(tg.graph().out_edges(i).size() == 2);
        CHECK(check_eulerian(tg).ok);
    }
    SUBCASE("complete graph on three vertices") {
        TreeGraph tg = TreeGraph::build(complete_graph(3));
        CHECK(tg.tree_count() == 9);
        for (int i = 0; i < tg.tree_count(); ++i)
            CHECK(tg.graph().out_edges(i).size() == 2);
    }
    SUBCASE("complete graph on four vertices") {
        TreeGraph tg = TreeGraph::build(complete_graph(4));
        CHECK(tg.tree_count() == 64);
        EulerianReport rep = check_eulerian(tg);
        CHECK(rep.ok);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("no arborescence is an error") {
    CHECK_THROWS_AS(TreeGraph::build(make_graph(2, {})), InputError);
}

TEST_CASE("covering lifts") {
    DiGraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    TreeGraph tg = TreeGraph::build(g);
    SUBCASE("empty path lifts to nothing") {
        CHECK(check_covering(tg, {}, 0).empty());
    }
    SUBCASE("full cycle returns and projects back") {
        int start = 0;
        VertexId r = tg.root_of(start);
        std::vector<int> path;
        VertexId cur = r;
        for (int k = 0; k < 3; ++k) {
            int eid = g.out_edges(cur).front();
            path.push_back(eid);
            cur = g.edge(eid).target;
        }
        auto lift = check_covering(tg, path, start);
        REQUIRE(lift.size() == 3);
        for (size_t k = 0; k < 3; ++k) CHECK(tg.label_of(lift[k]) == path[k]);
        CHECK(tg.edges()[static_cast<size_t>(lift.back())].dst == start);
    }
    SUBCASE("path must start at the root") {
        CHECK_THROWS_AS(check_covering(tg, {g.in_edges(tg.root_of(0)).front()}, 0), InputError);
    }
}

TEST_CASE("all length-two paths lift uniquely on the bidirected triangle") {
    DiGraph g = cycle_graph(3);
    TreeGraph tg = TreeGraph::build(g);
    int start = 0;
    VertexId r = tg.root_of(start);
    int count = 0;
    for (int e1 : g.out_edges(r))
        for (int e2 : g.out_edges(g.edge(e1).target)) {
            auto lift = check_covering(tg, {e1, e2}, start);
            REQUIRE(lift.size() == 2);
            CHECK(tg.label_of(lift[0]) == e1);
            CHECK(tg.label_of(lift[1]) == e2);
            ++count;
        }
    CHECK(count == 4);
}

namespace {

void check_partition(const DiGraph& g) {
    TreeGraph tg = TreeGraph::build(g);
    auto cycles = cycle_partition(tg);

    // every tree-graph edge in exactly one cycle
    std::set<int> seen;
    for (const LiftedCycle& c : cycles)
        for (int e : c.tg_edges) CHECK(seen.insert(e).second);
    CHECK(seen.size() == tg.edges().size());

    // cycles project bijectively onto simple cycles of G
    for (const LiftedCycle& c : cycles) {
        CHECK(c.tg_edges.size() == c.base_cycle.size());
        std::set<VertexId> verts;
        VertexId cur = g.edge(c.base_cycle.front()).source;
        for (int eid : c.base_cycle) {
            CHECK(g.edge(eid).source == cur);
            CHECK(verts.insert(cur).second);
            cur = g.edge(eid).target;
        }
        CHECK(cur == g.edge(c.base_cycle.front()).source);
    }

    // the number of cycles above a simple cycle equals the number of forests
    // rooted at its vertex set
    std::map<std::vector<int>, long> per_cycle;
    for (const LiftedCycle& c : cycles) {
        std::vector<int> key = c.base_cycle;
        std::sort(key.begin(), key.end());
        ++per_cycle[key];
    }
    for (auto& [key, count] : per_cycle) {
        VertexSet w;
        for (int eid : key) w.push_back(g.edge(eid).source);
        std::sort(w.begin(), w.end());
        CHECK(count == static_cast<long>(enumerate_forests(g, w).size()));
    }
}

}  // namespace

TEST_CASE("cycle partition on fixtures") {
    SUBCASE("directed 3-cycle: one lifted cycle through everything") {
        DiGraph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
        auto cycles = cycle_partition(TreeGraph::build(g));
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].tg_edges.size() == 3);
        check_partition(g);
    }
    SUBCASE("bidirected 2-cycle") {
        DiGraph g = make_graph(2, {{0, 1}, {1, 0}});
        auto cycles = cycle_partition(TreeGraph::build(g));
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].tg_edges.size() == 2);
        check_partition(g);
    }
    SUBCASE("bidirected triangle: one lifted cycle per forest above each 2-cycle") {
        DiGraph g = cycle_graph(3);
        auto cycles = cycle_partition(TreeGraph::build(g));
        std::map<VertexSet, long> by_support;
        for (const LiftedCycle& c : cycles)
            if (c.base_vertices.size() == 2) ++by_support[c.base_vertices];
        CHECK(by_support.size() == 3);
        // two forests rooted in each pair: the third vertex picks either out-edge
        for (auto& [w, count] : by_support) {
            CHECK(count == 2);
            CHECK(count == static_cast<long>(enumerate_forests(g, w).size()));
        }
        // edge balance: 3 pairs x 2 forests x length 2, plus 2 triangles x length 3
        CHECK(cycles.size() == 8);
        check_partition(g);
    }
}

TEST_CASE("cycle partition on every small graph") {
    // all digraphs on up to 3 vertices that have a spanning tree
    for (int n = 1; n <= 3; ++n) {
        const int pairs = n * (n - 1);
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::pair<int, int>> arcs;
            int idx = 0;
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    if (s == t) continue;
                    if (mask & (1u << idx)) arcs.emplace_back(s, t);
                    ++idx;
                }
            DiGraph g = make_graph(n, arcs);
            if (enumerate_spanning_trees(g).empty()) continue;
            check_partition(g);
            CHECK(check_eulerian(TreeGraph::build(g)).ok);
        }
    }
}

TEST_CASE("tree graph stays strongly connected") {
    std::mt19937_64 rng(91);
    int tested = 0;
    while (tested < 15) {
        DiGraph g = random_digraph(rng, 2 + static_cast<int>(rng() % 3), 55, 100);
        if (!is_strongly_connected(g)) continue;
        ++tested;
        TreeGraph tg = TreeGraph::build(g);
        CHECK(is_strongly_connected(tg.graph()));
        // projection maps tree-graph edges onto edges leaving the root
        for (const TreeGraphEdge& e : tg.edges())
            CHECK(g.edge(e.label).source == tg.root_of(e.src));
    }
}

#include <doctest.h>

#include <random>

#include "treegraph/factorization.hpp"
#include "treegraph/multiedge.hpp"
#include "treegraph/random_graphs.hpp"

using namespace treegraph;

namespace {

MultiDiGraph make_multi(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    return MultiDiGraph::make(names, arcs);
}

}  // namespace

TEST_CASE("subdivision shape") {
    SUBCASE("doubled return edge") {
        MultiDiGraph mg = make_multi(2, {{0, 1}, {1, 0}, {1, 0}});
        Subdivision sub = subdivide(mg);
        CHECK(sub.simple.vertex_count() == 5);
        CHECK(sub.simple.edge_count() == 6);
        for (int a = 0; a < mg.arc_count(); ++a) {
            const auto& img = sub.arc_images[static_cast<size_t>(a)];
            CHECK(sub.simple.edge(img.in_half).source == mg.arcs[static_cast<size_t>(a)].first);
            CHECK(sub.simple.edge(img.in_half).target == img.midpoint);
            CHECK(sub.simple.edge(img.out_half).source == img.midpoint);
            CHECK(sub.simple.edge(img.out_half).target == mg.arcs[static_cast<size_t>(a)].second);
        }
    }
    SUBCASE("simple input subdivides uniformly") {
        MultiDiGraph mg = make_multi(3, {{0, 1}, {1, 2}, {2, 0}});
        Subdivision sub = subdivide(mg);
        CHECK(sub.simple.vertex_count() == 6);
        CHECK(sub.simple.edge_count() == 6);
    }
    SUBCASE("loops are dropped on ingest") {
        MultiDiGraph mg = make_multi(2, {{0, 0}, {0, 1}, {1, 0}});
        CHECK(mg.arc_count() == 2);
        REQUIRE(mg.dropped_loops.size() == 1);
        CHECK(subdivide(mg).simple.vertex_count() == 4);
    }
}

TEST_CASE("tree transfer on fixtures") {
    SUBCASE("doubled edge") {
        MultiDiGraph mg = make_multi(2, {{0, 1}, {1, 0}, {1, 0}});
        Subdivision sub = subdivide(mg);
        TransferReport rep = transfer_trees(sub, 0);
        CHECK(rep.ok);
        CHECK(rep.original_count == 2);
        CHECK(rep.subdivided_count == 2);
        REQUIRE(rep.midpoint_counts.size() == 1);  // one arc leaves vertex 0
        CHECK(rep.midpoint_counts[0].second == 2);
        TransferReport rep1 = transfer_trees(sub, 1);
        CHECK(rep1.ok);
        CHECK(rep1.original_count == 1);
    }
    SUBCASE("directed 3-cycle stays intact") {
        MultiDiGraph mg = make_multi(3, {{0, 1}, {1, 2}, {2, 0}});
        Subdivision sub = subdivide(mg);
        for (VertexId v = 0; v < 3; ++v) {
            TransferReport rep = transfer_trees(sub, v);
            CHECK(rep.ok);
            CHECK(rep.original_count == 1);
        }
    }
}

TEST_CASE("weights transfer verbatim") {
    MultiDiGraph mg = make_multi(2, {{0, 1}, {1, 0}, {1, 0}});
    Subdivision sub = subdivide(mg);
    std::vector<Rat> arc_values{Rat(3), Rat(5), Rat(7)};
    Assignment lifted = sub.lift_assignment(arc_values);
    auto originals = multigraph_trees(mg, 0);
    Rat original_sum(0);
    for (const auto& choice : originals) {
        Rat w(1);
        for (int a : choice)
            if (a >= 0) w *= arc_values[static_cast<size_t>(a)];
        original_sum += w;
    }
    Rat lifted_sum(0);
    visit_forests(sub.simple, {0}, [&](const std::vector<int>& out_edge) {
        Rat w(1);
        for (int e : out_edge)
            if (e >= 0) w *= lifted.at(x_var(e));
        lifted_sum += w;
    });
    CHECK(original_sum == lifted_sum);
    CHECK(original_sum == Rat(12));  // 5 + 7
}

TEST_CASE("random multigraphs transfer at every root") {
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 15; ++iter) {
        MultiDiGraph mg = random_multigraph(rng, 4, 3);
        Subdivision sub = subdivide(mg);
        for (VertexId v = 0; v < mg.vertex_count(); ++v) {
            TransferReport rep = transfer_trees(sub, v);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("the factorization pipeline runs on a subdivided multigraph") {
    MultiDiGraph mg = make_multi(2, {{0, 1}, {1, 0}, {1, 0}});
    Subdivision sub = subdivide(mg);
    REQUIRE(is_strongly_connected(sub.simple));
    TreeGraph tg = TreeGraph::build(sub.simple);
    MultiplicityTable table = multiplicity_table(sub.simple, tg.trees());
    CHECK(verify_main_theorem(tg, table, 2, 23).ok);
    CHECK(verify_minor_identity(tg, table, 2, 23).ok);
    CHECK(verify_spanning_ratio(tg, table, 2, 23).ok);
    CHECK(verify_adjacency_factorization(tg, table, 23).ok);
}

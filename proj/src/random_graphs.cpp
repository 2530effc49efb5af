#include "treegraph/random_graphs.hpp"

#include <algorithm>

#include "treegraph/spanning.hpp"

namespace treegraph {

DiGraph relabel_vertices(const DiGraph& g, const std::vector<int>& new_id_of_old) {
    const int n = g.vertex_count();
    if (static_cast<int>(new_id_of_old.size()) != n) throw InputError("permutation size mismatch");
    std::vector<std::string> names(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v) names[static_cast<size_t>(new_id_of_old[static_cast<size_t>(v)])] = g.vertex_name(v);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        arcs.emplace_back(new_id_of_old[static_cast<size_t>(e.source)],
                          new_id_of_old[static_cast<size_t>(e.target)]);
    return DiGraph::make(std::move(names), arcs);
}

DiGraph random_digraph(std::mt19937_64& rng, int n, std::uint32_t p_num, std::uint32_t p_den) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId s = 0; s < n; ++s)
        for (VertexId t = 0; t < n; ++t) {
            if (s == t) continue;
            if (rng() % p_den < p_num) arcs.emplace_back(s, t);
        }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    return DiGraph::make(std::move(names), arcs);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<size_t>(i)], p[rng() % static_cast<std::uint64_t>(i + 1)]);
    return p;
}

DiGraph random_strongly_connected(std::uint64_t seed, std::uint64_t index, long max_trees) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + index + 1);
    for (int attempt = 0;; ++attempt) {
        int n = 2 + static_cast<int>(rng() % 4);            // 2..5 vertices
        std::uint32_t p_num = 30 + static_cast<std::uint32_t>(rng() % 56);  // density 30%..85%
        DiGraph g = random_digraph(rng, n, p_num, 100);
        if (!is_strongly_connected(g)) continue;
        if (count_spanning_trees(g, max_trees) > max_trees) continue;
        return g;
    }
}

std::vector<DiGraph> random_suite(std::uint64_t seed, int count, long max_trees) {
    std::vector<DiGraph> suite;
    suite.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        suite.push_back(random_strongly_connected(seed, static_cast<std::uint64_t>(i), max_trees));
    return suite;
}

MultiDiGraph random_multigraph(std::mt19937_64& rng, int max_n, int max_mult) {
    int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId s = 0; s < n; ++s)
        for (VertexId t = 0; t < n; ++t) {
            if (s == t && rng() % 8 == 0) arcs.emplace_back(s, t);  // loops; dropped on ingest
            if (s == t) continue;
            int mult = static_cast<int>(rng() % static_cast<std::uint64_t>(max_mult + 1));
            if (rng() % 3 == 0) mult = 0;
            for (int k = 0; k < mult; ++k) arcs.emplace_back(s, t);
        }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    return MultiDiGraph::make(std::move(names), arcs);
}

}  // namespace treegraph

#pragma once

#include <string>
#include <vector>

#include "treegraph/digraph.hpp"

namespace treegraph {

// Bidirected cycle on vertices 1..n (edges i -> i±1 mod n).
DiGraph cycle_graph(int n);

// Complete digraph on n vertices (all ordered pairs).
DiGraph complete_graph(int n);

// Directed cycle 1 -> 2 -> ... -> n -> 1.
DiGraph directed_cycle_graph(int n);

// Bouquet with petal sizes n_1..n_k: hub 0, petal anchors 1..k, and leaves
// v_i^j. Edges 0 -> i, i -> v_i^j, v_i^j -> 0.
struct BouquetGraph {
    DiGraph graph;
    std::vector<int> petal_sizes;
    VertexId hub = 0;
    // vertex/edge lookups
    VertexId anchor(int i) const;                 // vertex i (1-based petal)
    VertexId leaf(int i, int j) const;            // v_i^j (1-based j)
    int hub_edge(int i) const;                    // edge 0 -> i
    int petal_edge(int i, int j) const;           // edge i -> v_i^j (weight x_i^j)
    int return_edge(int i, int j) const;          // edge v_i^j -> 0
    // W_I: the hub plus the petals indexed by I (1-based indices)
    VertexSet petal_subset(const std::vector<int>& petals) const;
};
BouquetGraph bouquet_graph(const std::vector<int>& petal_sizes);

// Bidirected hypercube {0,1}^n; vertex ids are the binary codes, names are
// bitstrings. Edge (u, axis i) flips bit i.
DiGraph hypercube_graph(int n);
int hypercube_edge(int n, int code, int axis);  // edge id of code -> code^(1<<axis)

// Parses "cycle:4", "complete:3", "bouquet:2,3", "hypercube:2",
// "dicycle:5".
DiGraph builtin_graph(const std::string& descriptor);

}  // namespace treegraph

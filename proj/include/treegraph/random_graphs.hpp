#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "treegraph/digraph.hpp"
#include "treegraph/multiedge.hpp"

namespace treegraph {

// Relabels vertices: position new_id_of_old[v] of the new graph holds the old
// vertex v. Edge order is preserved.
DiGraph relabel_vertices(const DiGraph& g, const std::vector<int>& new_id_of_old);

// Random digraph on n vertices; each ordered pair is an edge independently
// with probability p_num/p_den.
DiGraph random_digraph(std::mt19937_64& rng, int n, std::uint32_t p_num, std::uint32_t p_den);

std::vector<int> random_permutation(std::mt19937_64& rng, int n);

// The deterministic verification suite: strongly connected digraphs with
// 2..5 vertices and a bounded spanning-tree count, of mixed density.
std::vector<DiGraph> random_suite(std::uint64_t seed, int count, long max_trees = 120);

// One strongly connected digraph (2..5 vertices) derived from (seed, index),
// with the same acceptance rules as random_suite.
DiGraph random_strongly_connected(std::uint64_t seed, std::uint64_t index, long max_trees = 120);

// Random multigraph on up to max_n vertices with edge multiplicity <= max_mult
// (loops possible in the raw arc list; the ingest drops them).
MultiDiGraph random_multigraph(std::mt19937_64& rng, int max_n, int max_mult);

}  // namespace treegraph

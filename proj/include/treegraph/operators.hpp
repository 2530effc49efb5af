#pragma once

#include <vector>

#include "treegraph/digraph.hpp"
#include "treegraph/matrix.hpp"
#include "treegraph/tree_graph.hpp"

namespace treegraph {

inline constexpr int kLiftedDimensionGuard = 2000;

enum class OperatorKind {
    laplacian,    // Q: x_e off-diagonal, minus the out-weight sum on the diagonal
    schrodinger,  // L = Q + diag(y_v)
    adjacency,    // M: L with y_v specialized to the out-weight sum of v
};

// Operators on G, labeled by vertex ids.
LabeledMatrix<MultiPoly> build_operator(const DiGraph& g, OperatorKind kind);
LabeledMatrix<Rat> build_operator(const DiGraph& g, OperatorKind kind, const Assignment& a);

// Lifted operators on the tree graph, labeled by tree ids. Edge weights are
// pulled back along the projection; the potential of a tree is read at its
// root.
LabeledMatrix<MultiPoly> build_lifted_operator(const TreeGraph& tg, OperatorKind kind);
LabeledMatrix<Rat> build_lifted_operator(const TreeGraph& tg, OperatorKind kind, const Assignment& a);

// det((-Q)^{rooted_in}) under the assignment; equals the generating value of
// forests rooted in `rooted_in`. The negation makes the determinant the
// forest sum verbatim (Q itself carries a negative diagonal, so the literal
// determinant would be off by (-1)^(dimension)).
Rat matrix_tree_det(const DiGraph& g, const VertexSet& rooted_in, const Assignment& a);

// x_e variables of g, and optionally the y_v potentials, ascending.
std::vector<Var> graph_variables(const DiGraph& g, bool include_potentials);

// Convenience: every variable of g mapped to pseudo-random values.
Assignment random_graph_assignment(const DiGraph& g, std::uint64_t seed, std::uint64_t trial,
                                   bool include_potentials = true);

}  // namespace treegraph

#include "treegraph/operators.hpp"

#include <numeric>

namespace treegraph {

LabeledMatrix<MultiPoly> build_operator(const DiGraph& g, OperatorKind kind) {
    const int n = g.vertex_count();
    LabeledMatrix<MultiPoly> out;
    out.labels.resize(static_cast<size_t>(n));
    std::iota(out.labels.begin(), out.labels.end(), 0);
    out.mat = Mat<MultiPoly>(n);
    for (VertexId v = 0; v < n; ++v) {
        MultiPoly diag;
        for (int eid : g.out_edges(v)) {
            const Edge& e = g.edge(eid);
            out.mat.at(v, e.target) = MultiPoly::var(x_var(eid));
            diag -= MultiPoly::var(x_var(eid));
        }
        if (kind == OperatorKind::schrodinger) diag += MultiPoly::var(y_var(v));
        if (kind == OperatorKind::adjacency) {
            // y_v specialized to the out-weight sum cancels the Laplacian diagonal
            diag = MultiPoly();
        }
        out.mat.at(v, v) = diag;
    }
    return out;
}

LabeledMatrix<Rat> build_operator(const DiGraph& g, OperatorKind kind, const Assignment& a) {
    const int n = g.vertex_count();
    LabeledMatrix<Rat> out;
    out.labels.resize(static_cast<size_t>(n));
    std::iota(out.labels.begin(), out.labels.end(), 0);
    out.mat = Mat<Rat>(n);
    for (VertexId v = 0; v < n; ++v) {
        Rat diag(0);
        for (int eid : g.out_edges(v)) {
            const Edge& e = g.edge(eid);
            auto it = a.find(x_var(eid));
            if (it == a.end()) throw std::invalid_argument("assignment missing " + var_name(x_var(eid)));
            out.mat.at(v, e.target) = it->second;
            diag -= it->second;
        }
        if (kind == OperatorKind::schrodinger) {
            auto it = a.find(y_var(v));
            if (it == a.end()) throw std::invalid_argument("assignment missing " + var_name(y_var(v)));
            diag += it->second;
        }
        if (kind == OperatorKind::adjacency) diag = 0;
        out.mat.at(v, v) = diag;
    }
    return out;
}

namespace {

void check_lifted_dim(int n) {
    if (n > kLiftedDimensionGuard)
        throw GuardError("lifted operator dimension " + std::to_string(n) + " exceeds guard " +
                         std::to_string(kLiftedDimensionGuard));
}

}  // namespace

LabeledMatrix<MultiPoly> build_lifted_operator(const TreeGraph& tg, OperatorKind kind) {
    const int n = tg.tree_count();
    check_lifted_dim(n);
    LabeledMatrix<MultiPoly> out;
    out.labels.resize(static_cast<size_t>(n));
    std::iota(out.labels.begin(), out.labels.end(), 0);
    out.mat = Mat<MultiPoly>(n);
    std::vector<MultiPoly> diag(static_cast<size_t>(n));
    for (const TreeGraphEdge& e : tg.edges()) {
        out.mat.at(e.src, e.dst) = MultiPoly::var(x_var(e.label));
        diag[static_cast<size_t>(e.src)] -= MultiPoly::var(x_var(e.label));
    }
    for (int i = 0; i < n; ++i) {
        if (kind == OperatorKind::schrodinger) diag[static_cast<size_t>(i)] += MultiPoly::var(y_var(tg.root_of(i)));
        if (kind == OperatorKind::adjacency) diag[static_cast<size_t>(i)] = MultiPoly();
        out.mat.at(i, i) = diag[static_cast<size_t>(i)];
    }
    return out;
}

LabeledMatrix<Rat> build_lifted_operator(const TreeGraph& tg, OperatorKind kind, const Assignment& a) {
    const int n = tg.tree_count();
    check_lifted_dim(n);
    LabeledMatrix<Rat> out;
    out.labels.resize(static_cast<size_t>(n));
    std::iota(out.labels.begin(), out.labels.end(), 0);
    out.mat = Mat<Rat>(n);
    std::vector<Rat> diag(static_cast<size_t>(n), Rat(0));
    for (const TreeGraphEdge& e : tg.edges()) {
        auto it = a.find(x_var(e.label));
        if (it == a.end()) throw std::invalid_argument("assignment missing " + var_name(x_var(e.label)));
        out.mat.at(e.src, e.dst) = it->second;
        diag[static_cast<size_t>(e.src)] -= it->second;
    }
    for (int i = 0; i < n; ++i) {
        if (kind == OperatorKind::schrodinger) {
            auto it = a.find(y_var(tg.root_of(i)));
            if (it == a.end())
                throw std::invalid_argument("assignment missing " + var_name(y_var(tg.root_of(i))));
            diag[static_cast<size_t>(i)] += it->second;
        }
        if (kind == OperatorKind::adjacency) diag[static_cast<size_t>(i)] = 0;
        out.mat.at(i, i) = diag[static_cast<size_t>(i)];
    }
    return out;
}

Rat matrix_tree_det(const DiGraph& g, const VertexSet& rooted_in, const Assignment& a) {
    if (rooted_in.empty()) throw InputError("empty root set");
    LabeledMatrix<Rat> q = build_operator(g, OperatorKind::laplacian, a);
    LabeledMatrix<Rat> minor = q.deleted(std::vector<int>(rooted_in.begin(), rooted_in.end()));
    for (int i = 0; i < minor.dim(); ++i)
        for (int j = 0; j < minor.dim(); ++j) minor.mat.at(i, j) = -minor.mat.at(i, j);
    return det_exact(minor.mat);
}

std::vector<Var> graph_variables(const DiGraph& g, bool include_potentials) {
    std::vector<Var> vars;
    for (int e = 0; e < g.edge_count(); ++e) vars.push_back(x_var(e));
    if (include_potentials)
        for (VertexId v = 0; v < g.vertex_count(); ++v) vars.push_back(y_var(v));
    std::sort(vars.begin(), vars.end());
    return vars;
}

Assignment random_graph_assignment(const DiGraph& g, std::uint64_t seed, std::uint64_t trial,
                                   bool include_potentials) {
    return random_assignment(graph_variables(g, include_potentials), seed, trial);
}

}  // namespace treegraph

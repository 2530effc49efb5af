#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treegraph/builtins.hpp"
#include "treegraph/factorization.hpp"
#include "treegraph/json_io.hpp"
#include "treegraph/multiedge.hpp"

namespace py = pybind11;
using namespace treegraph;

namespace {

DiGraph graph_from_json_str(const std::string& text) {
    return any_graph_from_json(json::parse(text));
}

struct Session {
    DiGraph graph;
    TreeGraph tg;
    MultiplicityTable table;
};

Session open_session(const DiGraph& g) {
    TreeGraph tg = TreeGraph::build(g);
    MultiplicityTable table = multiplicity_table(g, tg.trees());
    return Session{g, std::move(tg), std::move(table)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact spanning-tree-graph workbench";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<GuardError>(m, "GuardError");

    py::class_<DiGraph>(m, "DiGraph")
        .def_property_readonly("vertex_count", &DiGraph::vertex_count)
        .def_property_readonly("edge_count", &DiGraph::edge_count)
        .def("vertex_name", &DiGraph::vertex_name)
        .def("edges",
             [](const DiGraph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.source, e.target);
                 return out;
             })
        .def("to_json", [](const DiGraph& g) { return graph_to_json(g).dump(); })
        .def("__repr__", [](const DiGraph& g) {
            return "DiGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("builtin", &builtin_graph, py::arg("descriptor"),
          "cycle:N | complete:N | bouquet:N1,N2,... | hypercube:N | dicycle:N");
    m.def("from_json", &graph_from_json_str, py::arg("text"));
    m.def("is_strongly_connected", &is_strongly_connected);
    m.def("strongly_connected_subsets", &strongly_connected_subsets);
    m.def("scc_components", &scc_components);

    m.def("spanning_tree_count",
          [](const DiGraph& g) { return static_cast<long>(enumerate_spanning_trees(g).size()); });
    m.def("spanning_trees", [](const DiGraph& g) {
        std::vector<std::pair<int, std::vector<int>>> out;
        for (const SpanningTree& t : enumerate_spanning_trees(g))
            out.emplace_back(t.root, t.sorted_edge_ids());
        return out;
    });
    m.def("forest_count", [](const DiGraph& g, const VertexSet& w) {
        return static_cast<long>(enumerate_forests(g, w).size());
    });

    m.def("tree_graph_json",
          [](const DiGraph& g) { return tree_graph_to_json(TreeGraph::build(g)).dump(); });
    m.def("tree_graph_dot", [](const DiGraph& g) { return tree_graph_to_dot(TreeGraph::build(g)); });

    m.def("multiplicity_table", [](const DiGraph& g) {
        std::vector<std::pair<std::vector<int>, long>> out;
        for (const MultiplicityEntry& e : multiplicity_table(g).entries) out.emplace_back(e.w, e.m);
        return out;
    });
    m.def("athanasiadis_multiplicity", &athanasiadis_multiplicity);

    m.def("matrix_tree_count", [](const DiGraph& g, const VertexSet& rooted_in) {
        Assignment ones;
        for (int e = 0; e < g.edge_count(); ++e) ones[x_var(e)] = 1;
        Rat d = matrix_tree_det(g, rooted_in, ones);
        return d.get_str();
    });

    m.def(
        "verify",
        [](const DiGraph& g, int trials, std::uint64_t seed) {
            Session s = open_session(g);
            json checks = json::array();
            bool ok = true;
            for (const FactorizationReport& r :
                 {verify_main_theorem(s.tg, s.table, trials, seed),
                  verify_minor_identity(s.tg, s.table, trials, seed),
                  verify_spanning_ratio(s.tg, s.table, trials, seed),
                  verify_adjacency_factorization(s.tg, s.table, seed)}) {
                ok = ok && r.ok;
                checks.push_back(report_to_json(r));
            }
            return json{{"ok", ok}, {"checks", checks}}.dump();
        },
        py::arg("graph"), py::arg("trials") = kDefaultTrials, py::arg("seed") = kDefaultSeed);

    m.def("builtin_examples", []() {
        json out = json::array();
        for (const NamedCheck& c : builtin_examples()) out.push_back(named_check_to_json(c));
        return out.dump();
    });

    m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);
    m.attr("DEFAULT_TRIALS") = py::int_(kDefaultTrials);
#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}

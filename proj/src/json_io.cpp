#include "treegraph/json_io.hpp"

#include <sstream>

#include "treegraph/multiedge.hpp"

namespace treegraph {

json graph_to_json(const DiGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json{{"s", e.source}, {"t", e.target}});
    return json{{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

namespace {

std::pair<std::vector<std::string>, std::vector<std::pair<VertexId, VertexId>>> parse_graph_body(
    const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph document needs 'vertices' and 'edges'");
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw InputError("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("s") || !e.contains("t"))
            throw InputError("edge entries need fields 's' and 't'");
        arcs.emplace_back(e.at("s").get<int>(), e.at("t").get<int>());
    }
    return {std::move(names), std::move(arcs)};
}

}  // namespace

DiGraph graph_from_json(const json& j) {
    auto [names, arcs] = parse_graph_body(j);
    return DiGraph::make(std::move(names), arcs);
}

json multigraph_to_json(const MultiDiGraph& mg) {
    json edges = json::array();
    for (const auto& [s, t] : mg.arcs) edges.push_back(json{{"s", s}, {"t", t}});
    return json{{"multi", true}, {"vertices", mg.vertex_names}, {"edges", std::move(edges)}};
}

MultiDiGraph multigraph_from_json(const json& j) {
    auto [names, arcs] = parse_graph_body(j);
    return MultiDiGraph::make(std::move(names), arcs);
}

DiGraph any_graph_from_json(const json& j, bool* was_multi) {
    bool multi = j.is_object() && j.value("multi", false);
    if (was_multi) *was_multi = multi;
    if (!multi) return graph_from_json(j);
    return subdivide(multigraph_from_json(j)).simple;
}

json tree_to_json(const SpanningTree& t) {
    return json{{"root", t.root}, {"edges", t.sorted_edge_ids()}};
}

json forest_to_json(const Forest& f) {
    return json{{"roots", f.roots}, {"edges", f.sorted_edge_ids()}};
}

json polynomial_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors()) mono[var_name(v)] = e;
        terms.push_back(json{{"coeff", c.get_str()}, {"monomial", std::move(mono)}});
    }
    return terms;
}

MultiPoly polynomial_from_json(const json& j) {
    MultiPoly p;
    for (const auto& t : j) {
        Monomial m;
        for (const auto& [name, e] : t.at("monomial").items())
            m = m * Monomial::var(var_from_name(name), e.get<int>());
        p += MultiPoly::monomial(m, rat_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

json multiplicity_table_to_json(const MultiplicityTable& table) {
    json out = json::array();
    for (const MultiplicityEntry& e : table.entries) {
        json witnesses = json::object();
        for (const auto& [w, trees] : e.witnesses) witnesses[std::to_string(w)] = trees;
        out.push_back(json{{"W", e.w}, {"m", e.m}, {"witnesses", std::move(witnesses)}});
    }
    return out;
}

json tree_graph_to_json(const TreeGraph& tg) {
    json vertices = json::array();
    for (int i = 0; i < tg.tree_count(); ++i) {
        const SpanningTree& t = tg.tree(i);
        vertices.push_back(json{{"root", t.root}, {"edges", t.sorted_edge_ids()}});
    }
    json edges = json::array();
    for (const TreeGraphEdge& e : tg.edges())
        edges.push_back(json{{"s", e.src}, {"t", e.dst}, {"label", e.label}});
    json roots = json::array();
    for (int i = 0; i < tg.tree_count(); ++i) roots.push_back(tg.root_of(i));
    return json{{"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"projection", json{{"roots", std::move(roots)}}}};
}

std::string graph_to_dot(const DiGraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    for (const Edge& e : g.edges())
        os << "  v" << e.source << " -> v" << e.target << " [label=\"x_" << e.id << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string tree_graph_to_dot(const TreeGraph& tg) {
    std::ostringstream os;
    os << "digraph TG {\n";
    for (int i = 0; i < tg.tree_count(); ++i) {
        const SpanningTree& t = tg.tree(i);
        os << "  t" << i << " [label=\"root " << tg.base().vertex_name(t.root) << ":";
        bool first = true;
        for (int e : t.sorted_edge_ids()) {
            os << (first ? " " : ",") << e;
            first = false;
        }
        os << "\"];\n";
    }
    for (const TreeGraphEdge& e : tg.edges())
        os << "  t" << e.src << " -> t" << e.dst << " [label=\"x_" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

json report_to_json(const FactorizationReport& rep) {
    json factors = json::array();
    for (const FactorEntry& f : rep.factors)
        factors.push_back(json{{"W", f.w}, {"m", f.m}, {"det", f.det_value}});
    json trials = json::array();
    for (const TrialCheck& t : rep.trials)
        trials.push_back(json{{"trial", t.trial}, {"ok", t.ok}, {"lhs", t.lhs}, {"rhs", t.rhs}});
    return json{{"check", rep.check}, {"ok", rep.ok},       {"seed", rep.seed},
                {"notes", rep.notes}, {"factors", factors}, {"trials", trials}};
}

json named_check_to_json(const NamedCheck& check) {
    return json{{"check", check.name}, {"ok", check.ok}, {"detail", check.detail}};
}

}  // namespace treegraph

#pragma once

#include <string>

#include <json.hpp>

#include "treegraph/digraph.hpp"
#include "treegraph/exploration.hpp"
#include "treegraph/factorization.hpp"
#include "treegraph/matrix.hpp"
#include "treegraph/multiedge.hpp"
#include "treegraph/spanning.hpp"
#include "treegraph/tree_graph.hpp"

namespace treegraph {

using json = nlohmann::ordered_json;

//   {"vertices": ["v1", ...], "edges": [{"s": i, "t": j}, ...]}
// with indices into the vertex list; array order is the total order.
json graph_to_json(const DiGraph& g);
DiGraph graph_from_json(const json& j);

// A {"multi": true} document; parallel (s, t) pairs allowed.
json multigraph_to_json(const MultiDiGraph& mg);
MultiDiGraph multigraph_from_json(const json& j);

// Accepts both simple and multi documents; multigraphs are subdivided.
// `was_multi` reports which path was taken.
DiGraph any_graph_from_json(const json& j, bool* was_multi = nullptr);

json tree_to_json(const SpanningTree& t);
json forest_to_json(const Forest& f);

json polynomial_to_json(const MultiPoly& p);
MultiPoly polynomial_from_json(const json& j);

template <typename T>
json matrix_to_json(const LabeledMatrix<T>& m, const std::vector<std::string>& label_names) {
    json labels = json::array();
    for (int l : m.labels) labels.push_back(label_names[static_cast<size_t>(l)]);
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            if constexpr (std::is_same_v<T, Rat>)
                row.push_back(m.mat.at(i, j).get_str());
            else
                row.push_back(m.mat.at(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return json{{"labels", std::move(labels)}, {"entries", std::move(rows)}};
}

json multiplicity_table_to_json(const MultiplicityTable& table);

json tree_graph_to_json(const TreeGraph& tg);
std::string tree_graph_to_dot(const TreeGraph& tg);
std::string graph_to_dot(const DiGraph& g);

json report_to_json(const FactorizationReport& rep);
json named_check_to_json(const NamedCheck& check);

}  // namespace treegraph

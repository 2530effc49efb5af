#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "treegraph/builtins.hpp"
#include "treegraph/factorization.hpp"
#include "treegraph/json_io.hpp"

using namespace treegraph;

namespace {

struct RunConfig {
    std::string input_path;
    std::string builtin;
    std::uint64_t seed = kDefaultSeed;
    int trials = kDefaultTrials;
    bool symbolic = false;
    std::string format = "json";
    std::string out_path;
};

struct GraphSource {
    DiGraph graph;
    bool subdivided_multigraph = false;
    std::string origin;
};

GraphSource load_graph(const RunConfig& cfg) {
    if (cfg.builtin.empty() == cfg.input_path.empty())
        throw InputError("provide exactly one of --input or --builtin");
    GraphSource src;
    if (!cfg.builtin.empty()) {
        src.graph = builtin_graph(cfg.builtin);
        src.origin = "builtin:" + cfg.builtin;
        return src;
    }
    std::ifstream in(cfg.input_path);
    if (!in) throw InputError("cannot open " + cfg.input_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    src.graph = any_graph_from_json(doc, &src.subdivided_multigraph);
    src.origin = cfg.input_path;
    return src;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + cfg.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

json graph_summary(const GraphSource& src) {
    json j{{"origin", src.origin},
           {"vertices", src.graph.vertex_count()},
           {"edges", src.graph.edge_count()},
           {"strongly_connected", is_strongly_connected(src.graph)}};
    if (src.subdivided_multigraph) j["subdivided_multigraph"] = true;
    if (!src.graph.dropped_loops().empty()) {
        json loops = json::array();
        for (auto& [v, c] : src.graph.dropped_loops()) loops.push_back(json{{"vertex", v}, {"count", c}});
        j["dropped_loops"] = std::move(loops);
    }
    return j;
}

int cmd_analyze(const RunConfig& cfg) {
    GraphSource src = load_graph(cfg);
    json rep{{"command", "analyze"}, {"graph", graph_summary(src)}};
    if (!is_strongly_connected(src.graph)) {
        rep["error"] = "graph is not strongly connected";
        emit(cfg, cfg.format == "text" ? "error: graph is not strongly connected" : rep.dump(2));
        return 2;
    }
    auto trees = enumerate_spanning_trees(src.graph);
    MultiplicityTable table = multiplicity_table(src.graph, trees);
    rep["tree_count"] = table.tree_count;
    rep["degree_identity"] = json{{"sum", table.degree_sum()}, {"tree_count", table.tree_count},
                                  {"ok", table.degree_sum() == table.tree_count}};
    rep["multiplicities"] = multiplicity_table_to_json(table);
    if (cfg.format == "text") {
        std::ostringstream os;
        os << "graph " << src.origin << ": " << src.graph.vertex_count() << " vertices, "
           << src.graph.edge_count() << " edges\n";
        os << "spanning trees: " << table.tree_count << "\n";
        os << "degree identity: sum |W| m(W) = " << table.degree_sum() << "\n";
        for (const MultiplicityEntry& e : table.entries) {
            if (e.m == 0) continue;
            os << "m({";
            for (size_t i = 0; i < e.w.size(); ++i)
                os << (i ? "," : "") << src.graph.vertex_name(e.w[i]);
            os << "}) = " << e.m << "\n";
        }
        emit(cfg, os.str());
    } else {
        emit(cfg, rep.dump(2));
    }
    return 0;
}

int cmd_treegraph(const RunConfig& cfg) {
    GraphSource src = load_graph(cfg);
    TreeGraph tg = TreeGraph::build(src.graph);
    EulerianReport euler = check_eulerian(tg);
    auto cycles = cycle_partition(tg);
    size_t covered = 0;
    for (const LiftedCycle& c : cycles) covered += c.tg_edges.size();
    bool partition_ok = covered == tg.edges().size();

    if (cfg.format == "dot") {
        emit(cfg, tree_graph_to_dot(tg));
        return euler.ok && partition_ok ? 0 : 1;
    }
    json rep{{"command", "treegraph"},
             {"graph", graph_summary(src)},
             {"tree_graph", tree_graph_to_json(tg)},
             {"eulerian", json{{"ok", euler.ok}, {"violations", euler.violations}}},
             {"cycle_partition", json{{"ok", partition_ok},
                                      {"cycles", cycles.size()},
                                      {"edges_covered", covered}}}};
    if (cfg.format == "text") {
        std::ostringstream os;
        os << "tree graph of " << src.origin << ": " << tg.tree_count() << " vertices, "
           << tg.edges().size() << " edges\n";
        os << "eulerian: " << (euler.ok ? "ok" : "VIOLATED") << "\n";
        os << "cycle partition: " << cycles.size() << " cycles covering " << covered << " edges\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, rep.dump(2));
    }
    return euler.ok && partition_ok ? 0 : 1;
}

json failing_assignment(const DiGraph& g, std::uint64_t seed, std::uint64_t trial) {
    json vals = json::object();
    for (Var v : graph_variables(g, true)) vals[var_name(v)] = random_value(seed, trial, v).get_str();
    return json{{"seed", seed}, {"trial", trial}, {"assignment", std::move(vals)}};
}

int cmd_verify(const RunConfig& cfg) {
    GraphSource src = load_graph(cfg);
    if (!is_strongly_connected(src.graph)) {
        emit(cfg, "error: verification requires a strongly connected graph");
        return 2;
    }
    TreeGraph tg = TreeGraph::build(src.graph);
    if (cfg.symbolic && tg.tree_count() > kSymbolicTreeGuard)
        throw GuardError("symbolic mode limited to " + std::to_string(kSymbolicTreeGuard) +
                         " spanning trees; this graph has " + std::to_string(tg.tree_count()));
    MultiplicityTable table = multiplicity_table(src.graph, tg.trees());

    std::vector<FactorizationReport> reports;
    reports.push_back(verify_main_theorem(tg, table, cfg.trials, cfg.seed));
    reports.push_back(verify_minor_identity(tg, table, cfg.trials, cfg.seed));
    reports.push_back(verify_spanning_ratio(tg, table, cfg.trials, cfg.seed));
    reports.push_back(verify_adjacency_factorization(tg, table, cfg.seed));

    bool all_ok = true;
    json rep{{"command", "verify"}, {"graph", graph_summary(src)},
             {"tree_count", tg.tree_count()}, {"seed", cfg.seed}, {"trials", cfg.trials}};
    json checks = json::array();
    json failures = json::array();
    for (const FactorizationReport& r : reports) {
        all_ok = all_ok && r.ok;
        checks.push_back(report_to_json(r));
        for (const TrialCheck& t : r.trials)
            if (!t.ok) failures.push_back(json{{"check", r.check},
                                               {"reproduce", failing_assignment(src.graph, cfg.seed, t.trial)}});
    }
    rep["checks"] = std::move(checks);
    rep["ok"] = all_ok;
    if (!failures.empty()) rep["failures"] = std::move(failures);

    if (cfg.format == "text") {
        std::ostringstream os;
        os << "verify " << src.origin << " (trees: " << tg.tree_count() << ", seed " << cfg.seed
           << ")\n";
        for (const FactorizationReport& r : reports)
            os << "  " << r.check << ": " << (r.ok ? "pass" : "FAIL") << "\n";
        os << (all_ok ? "all checks passed" : "VERIFICATION FAILED") << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, rep.dump(2));
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for spanning-tree graphs of directed graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input_path, "graph JSON file");
        sub->add_option("--builtin", cfg.builtin,
                        "builtin graph (cycle:N | complete:N | bouquet:N1,N2,... | hypercube:N | dicycle:N)");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--trials", cfg.trials, "evaluation trials")->check(CLI::PositiveNumber);
        sub->add_flag("--symbolic", cfg.symbolic, "force symbolic mode");
        sub->add_option("--format", cfg.format, "json | text | dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    };
    CLI::App* analyze = app.add_subcommand("analyze", "connectivity, tree count, multiplicity table");
    CLI::App* treegraph_cmd = app.add_subcommand("treegraph", "construct and export the tree graph");
    CLI::App* verify = app.add_subcommand("verify", "run the determinant factorization checks");
    add_common(analyze);
    add_common(treegraph_cmd);
    add_common(verify);

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (treegraph_cmd->parsed()) return cmd_treegraph(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

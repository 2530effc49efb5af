#include "treegraph/builtins.hpp"

#include <algorithm>
#include <sstream>

namespace treegraph {

namespace {

std::vector<std::string> numbered_names(int n, int start = 1) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(start + i));
    return names;
}

}  // namespace

DiGraph cycle_graph(int n) {
    if (n < 2) throw InputError("cycle graph needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(i, (i + 1) % n);
        if (n > 2) arcs.emplace_back(i, (i + n - 1) % n);
    }
    return DiGraph::make(numbered_names(n), arcs);
}

DiGraph directed_cycle_graph(int n) {
    if (n < 2) throw InputError("directed cycle needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return DiGraph::make(numbered_names(n), arcs);
}

DiGraph complete_graph(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.emplace_back(i, j);
    return DiGraph::make(numbered_names(n), arcs);
}

VertexId BouquetGraph::anchor(int i) const { return i; }

VertexId BouquetGraph::leaf(int i, int j) const {
    VertexId v = 1 + static_cast<int>(petal_sizes.size());
    for (int p = 1; p < i; ++p) v += petal_sizes[static_cast<size_t>(p - 1)];
    return v + (j - 1);
}

int BouquetGraph::hub_edge(int i) const {
    return *graph.find_edge(hub, anchor(i));
}

int BouquetGraph::petal_edge(int i, int j) const {
    return *graph.find_edge(anchor(i), leaf(i, j));
}

int BouquetGraph::return_edge(int i, int j) const {
    return *graph.find_edge(leaf(i, j), hub);
}

VertexSet BouquetGraph::petal_subset(const std::vector<int>& petals) const {
    VertexSet w{hub};
    for (int i : petals) {
        w.push_back(anchor(i));
        for (int j = 1; j <= petal_sizes[static_cast<size_t>(i - 1)]; ++j) w.push_back(leaf(i, j));
    }
    std::sort(w.begin(), w.end());
    return w;
}

BouquetGraph bouquet_graph(const std::vector<int>& petal_sizes) {
    const int k = static_cast<int>(petal_sizes.size());
    if (k < 1) throw InputError("bouquet needs at least one petal");
    std::vector<std::string> names{"0"};
    for (int i = 1; i <= k; ++i) names.push_back(std::to_string(i));
    for (int i = 1; i <= k; ++i) {
        if (petal_sizes[static_cast<size_t>(i - 1)] < 1) throw InputError("petal size must be >= 1");
        for (int j = 1; j <= petal_sizes[static_cast<size_t>(i - 1)]; ++j)
            names.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
    }
    BouquetGraph b;
    b.petal_sizes = petal_sizes;
    VertexId leaf_base = 1 + k;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (int i = 1; i <= k; ++i) arcs.emplace_back(0, i);
    VertexId leaf = leaf_base;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= petal_sizes[static_cast<size_t>(i - 1)]; ++j, ++leaf) {
            arcs.emplace_back(i, leaf);
            arcs.emplace_back(leaf, 0);
        }
    b.graph = DiGraph::make(std::move(names), arcs);
    return b;
}

DiGraph hypercube_graph(int n) {
    if (n < 1 || n > 10) throw InputError("hypercube dimension out of range");
    const int size = 1 << n;
    std::vector<std::string> names;
    for (int code = 0; code < size; ++code) {
        std::string s;
        for (int i = n - 1; i >= 0; --i) s += ((code >> i) & 1) ? '1' : '0';
        names.push_back(s);
    }
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (int code = 0; code < size; ++code)
        for (int i = 0; i < n; ++i) arcs.emplace_back(code, code ^ (1 << i));
    return DiGraph::make(std::move(names), arcs);
}

int hypercube_edge(int n, int code, int axis) { return code * n + axis; }

DiGraph builtin_graph(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos) throw InputError("builtin descriptor needs name:params");
    std::string name = descriptor.substr(0, colon);
    std::string params = descriptor.substr(colon + 1);
    try {
        if (name == "cycle") return cycle_graph(std::stoi(params));
        if (name == "dicycle") return directed_cycle_graph(std::stoi(params));
        if (name == "complete") return complete_graph(std::stoi(params));
        if (name == "hypercube") return hypercube_graph(std::stoi(params));
        if (name == "bouquet") {
            std::vector<int> sizes;
            std::stringstream ss(params);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
            return bouquet_graph(sizes).graph;
        }
    } catch (const std::invalid_argument&) {
        throw InputError("bad builtin parameters: " + descriptor);
    } catch (const std::out_of_range&) {
        throw InputError("bad builtin parameters: " + descriptor);
    }
    throw InputError("unknown builtin: " + name);
}

}  // namespace treegraph

#include "transclust/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace transclust {

void UndirectedGraph::check_node(NodeId i) const {
    if (i >= num_nodes())
        throw std::out_of_range("node id " + std::to_string(i) + " out of range [0, " +
                                std::to_string(num_nodes()) + ")");
}

std::size_t UndirectedGraph::degree(NodeId i) const {
    check_node(i);
    return offsets_[i + 1] - offsets_[i];
}

bool UndirectedGraph::has_edge(NodeId i, NodeId j) const {
    return arc_index(i, j) != npos;
}

std::size_t UndirectedGraph::arc_index(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    auto nb = neighbors(i);
    auto it = std::lower_bound(nb.begin(), nb.end(), j);
    if (it == nb.end() || *it != j) return npos;
    return offsets_[i] + static_cast<std::size_t>(it - nb.begin());
}

std::size_t UndirectedGraph::common_neighbor_count(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    if (i == j) throw std::invalid_argument("common_neighbor_count: i == j");
    auto a = neighbors(i);
    auto b = neighbors(j);
    if (a.size() > b.size()) std::swap(a, b);
    std::size_t count = 0;
    if (b.size() / (a.size() + 1) >= 16) {
        // very unbalanced: binary search the long list
        for (NodeId x : a)
            count += std::binary_search(b.begin(), b.end(), x) ? 1 : 0;
        return count;
    }
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

UndirectedGraph UndirectedGraph::from_edges(std::size_t n,
                                            std::vector<std::pair<NodeId, NodeId>> edges) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    UndirectedGraph g;
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.arcs_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.arcs_[cursor[u]++] = v;
        g.arcs_[cursor[v]++] = u;
    }
    // per-node lists come out sorted because edges are sorted by (u,v),
    // except for the mirror arcs; sort each range to be safe
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    return g;
}

UndirectedGraph UndirectedGraph::induced_subgraph(std::span<const NodeId> nodes) const {
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (NodeId x : sorted) check_node(x);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        for (NodeId j : neighbors(sorted[k])) {
            if (j <= sorted[k]) continue;
            auto it = std::lower_bound(sorted.begin(), sorted.end(), j);
            if (it != sorted.end() && *it == j)
                edges.emplace_back(static_cast<NodeId>(k),
                                   static_cast<NodeId>(it - sorted.begin()));
        }
    }
    UndirectedGraph sub = from_edges(sorted.size(), std::move(edges));
    std::vector<std::uint64_t> orig(sorted.size());
    for (std::size_t k = 0; k < sorted.size(); ++k) orig[k] = original_id(sorted[k]);
    sub.set_original_ids(std::move(orig));
    return sub;
}

UndirectedGraph load_edge_list(std::istream& in) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t u, v;
        if (!(ls >> u >> v)) {
            throw std::runtime_error("edge list parse error at line " +
                                     std::to_string(lineno) + ": '" + line + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("edge list parse error at line " +
                                     std::to_string(lineno) + ": trailing token '" +
                                     extra + "'");
        raw.emplace_back(u, v);
    }

    // dense remap in ascending original-id order
    std::map<std::uint64_t, NodeId> remap;
    for (const auto& [u, v] : raw) {
        remap.emplace(u, 0);
        remap.emplace(v, 0);
    }
    std::vector<std::uint64_t> original;
    original.reserve(remap.size());
    NodeId next = 0;
    for (auto& [orig, dense] : remap) {
        dense = next++;
        original.push_back(orig);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw)
        edges.emplace_back(remap.at(u), remap.at(v));

    UndirectedGraph g = UndirectedGraph::from_edges(remap.size(), std::move(edges));
    g.set_original_ids(std::move(original));
    return g;
}

UndirectedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return load_edge_list(in);
}

void save_edge_list(const UndirectedGraph& g, std::ostream& out) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        for (NodeId j : g.neighbors(i)) {
            if (j <= i) continue;
            auto a = g.original_id(i);
            auto b = g.original_id(j);
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace transclust

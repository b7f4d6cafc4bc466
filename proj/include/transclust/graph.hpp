#ifndef TRANSCLUST_GRAPH_HPP
#define TRANSCLUST_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace transclust {

using NodeId = std::uint32_t;

/// Immutable sparse undirected simple graph in CSR form.
/// Neighbor lists are strictly sorted; no self-loops, no duplicates.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Builds a graph from raw (u,v) pairs given in already-dense ids.
    /// Self-loops are dropped, duplicates collapsed, reverse arcs added.
    static UndirectedGraph from_edges(std::size_t n,
                                      std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const { return arcs_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {arcs_.data() + offsets_[i], arcs_.data() + offsets_[i + 1]};
    }

    std::size_t degree(NodeId i) const;
    bool has_edge(NodeId i, NodeId j) const;

    /// Position of arc (i,j) in the flat arc array, or npos if absent.
    std::size_t arc_index(NodeId i, NodeId j) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t arc_count() const { return arcs_.size(); }
    std::span<const std::size_t> offsets() const { return offsets_; }
    std::span<const NodeId> arcs() const { return arcs_; }

    /// |N_i ∩ N_j| via sorted-list intersection; i == j is a domain error.
    std::size_t common_neighbor_count(NodeId i, NodeId j) const;

    /// Subgraph on `nodes` (need not be sorted); keeps the id remapping.
    /// Position k of the result corresponds to nodes[k] after sorting.
    UndirectedGraph induced_subgraph(std::span<const NodeId> nodes) const;

    double mean_degree() const {
        return num_nodes() == 0 ? 0.0 : 2.0 * static_cast<double>(num_edges()) / static_cast<double>(num_nodes());
    }

    /// Original file id for dense node i (identity when built programmatically).
    std::uint64_t original_id(NodeId i) const {
        return original_ids_.empty() ? i : original_ids_[i];
    }
    bool has_original_ids() const { return !original_ids_.empty(); }
    void set_original_ids(std::vector<std::uint64_t> ids) { original_ids_ = std::move(ids); }

    bool operator==(const UndirectedGraph& other) const {
        return offsets_ == other.offsets_ && arcs_ == other.arcs_;
    }

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> arcs_;
    std::vector<std::uint64_t> original_ids_;

    void check_node(NodeId i) const;
};

/// Parses SNAP-style edge-list text: two integer tokens per line, '#' comments.
/// Arbitrary non-negative ids are densely remapped; the mapping is retained.
/// Throws std::runtime_error with a line number on malformed input.
UndirectedGraph load_edge_list(std::istream& in);
UndirectedGraph load_edge_list_file(const std::string& path);

/// Emits one line per edge, "u v" with u < v in original ids, sorted.
void save_edge_list(const UndirectedGraph& g, std::ostream& out);

}  // namespace transclust

#endif

#ifndef TRANSCLUST_SIMILARITY_HPP
#define TRANSCLUST_SIMILARITY_HPP

#include <memory>
#include <vector>

#include "transclust/graph.hpp"

namespace transclust {

struct LaplacianConfig {
    double tau = 0.0;  // regularizer added to every degree, must be >= 0
};

/// Sparse symmetric edge weights on the support of a base graph.
/// Weights are stored per directed arc, mirroring the graph's CSR layout,
/// so both weight(i,j) lookup and per-node traversal are O(log d) / O(d).
/// The base graph is shared, so a similarity stays valid after the
/// caller's graph object goes away.
class WeightedSimilarity {
public:
    enum class Kind { TriangleCount, Laplacian };

    WeightedSimilarity(UndirectedGraph base, Kind kind, double tau = 0.0)
        : base_(std::make_shared<UndirectedGraph>(std::move(base))),
          kind_(kind), tau_(tau), arc_weights_(base_->arc_count(), 0.0) {}
    WeightedSimilarity(std::shared_ptr<const UndirectedGraph> base, Kind kind,
                       double tau = 0.0)
        : base_(std::move(base)), kind_(kind), tau_(tau),
          arc_weights_(base_->arc_count(), 0.0) {}

    const UndirectedGraph& base() const { return *base_; }
    Kind kind() const { return kind_; }
    double tau() const { return tau_; }

    double weight(NodeId i, NodeId j) const;
    double arc_weight(std::size_t arc) const { return arc_weights_[arc]; }
    void set_arc_weight(std::size_t arc, double w) { arc_weights_[arc] = w; }

    struct Edge {
        NodeId u, v;
        double weight;
    };
    /// All undirected edges with u < v, sorted by (u, v).
    std::vector<Edge> edges() const;

private:
    std::shared_ptr<const UndirectedGraph> base_;
    Kind kind_;
    double tau_;
    std::vector<double> arc_weights_;
};

/// T = (AA)·A: weight(i,j) = |N_i ∩ N_j| for every edge.
/// Work is O(sum over edges of min(d_i, d_j)) = O(|E|^{3/2}).
WeightedSimilarity triangle_support(const UndirectedGraph& g);
WeightedSimilarity triangle_support_serial(const UndirectedGraph& g);

/// [L_τ L_τ]·L_τ: weight(i,j) = sum over common neighbors k of
/// 1 / ((d_i+τ)(d_j+τ)(d_k+τ)). τ < 0 is a domain error.
WeightedSimilarity laplacian_support(const UndirectedGraph& g, LaplacianConfig cfg);
WeightedSimilarity laplacian_support_serial(const UndirectedGraph& g, LaplacianConfig cfg);

/// Dense check of [LL]·L = [L_RW L_RW]·L_RW^T on the edge support,
/// with [L_RW]_{ij} = A_ij/(d_i+τ). True iff max abs diff <= 1e-12.
bool random_walk_equivalence_check(const UndirectedGraph& g, LaplacianConfig cfg);

}  // namespace transclust

#endif

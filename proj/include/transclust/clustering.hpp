#ifndef TRANSCLUST_CLUSTERING_HPP
#define TRANSCLUST_CLUSTERING_HPP

#include <vector>

#include "transclust/similarity.hpp"

namespace transclust {

/// Maximum spanning forest of a WeightedSimilarity, merges ordered by
/// non-increasing weight. Cutting at any level reproduces the connected
/// components of the >=-cut thresholded similarity.
struct Dendrogram {
    struct Merge {
        NodeId u, v;
        double weight;
    };
    std::vector<Merge> merges;
    std::size_t n = 0;
};

struct ClusterSet {
    std::vector<std::uint32_t> label;            // per-node cluster id
    std::vector<std::vector<NodeId>> blocks;     // disjoint, union = all nodes
    double cut = 0.0;
};

/// Maximal set containing `seed` reachable via edges with weight >= cut.
/// Thresholded BFS; identical to the fixed point of repeated boundary
/// expansion. Invalid seed is a domain error.
std::vector<NodeId> local_trans(const WeightedSimilarity& sim, NodeId seed, double cut);

/// Greedy maximum spanning forest (Kruskal + union-find) over edges sorted
/// by non-increasing weight; ties broken by (u,v) lexicographic order.
Dendrogram build_dendrogram(const WeightedSimilarity& sim);

/// Connected components of forest edges with weight >= cut.
ClusterSet cut_dendrogram(const Dendrogram& d, double cut);

/// cut_dendrogram(build_dendrogram(sim), cut).
ClusterSet global_trans(const WeightedSimilarity& sim, double cut);

}  // namespace transclust

#endif

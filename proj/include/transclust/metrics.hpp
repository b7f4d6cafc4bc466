#ifndef TRANSCLUST_METRICS_HPP
#define TRANSCLUST_METRICS_HPP

#include <cstdint>
#include <string>

#include "transclust/graph.hpp"

namespace transclust {

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t triangles = 0;
    std::uint64_t two_stars = 0;  // sum_j d_j^2 - d_j
    double transitivity = 0.0;
    double avg_clustering = 0.0;
    double mean_degree = 0.0;
};

/// Number of unordered triangles, degree-ordered edge-iterator method.
/// Parallelized over nodes; the sum is deterministic.
std::uint64_t count_triangles(const UndirectedGraph& g);

/// Single-threaded reference used by tests and the benchmark.
std::uint64_t count_triangles_serial(const UndirectedGraph& g);

/// sum_j d_j^2 - d_j, i.e. twice the number of 2-stars.
std::uint64_t connected_triple_count(const UndirectedGraph& g);

/// 6 * triangles / (sum d^2 - d); 0 when the graph has no connected triples.
double transitivity_ratio(const UndirectedGraph& g);

/// Edge density of the subgraph induced by N_i; 0 when degree(i) < 2.
double local_clustering(const UndirectedGraph& g, NodeId i);

/// Mean of local_clustering over all nodes; n = 0 is a domain error.
double avg_clustering(const UndirectedGraph& g);

GraphStats compute_stats(const UndirectedGraph& g);

/// Flat JSON object with fixed field names.
std::string stats_to_json(const GraphStats& s);

}  // namespace transclust

#endif

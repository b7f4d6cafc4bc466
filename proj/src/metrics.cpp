#include "transclust/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace transclust {

namespace {

// Rank nodes by (degree, id); orienting every edge from lower to higher
// rank caps the out-degree at O(sqrt(|E|)), giving the |E|^{3/2} bound.
std::vector<std::vector<NodeId>> oriented_adjacency(const UndirectedGraph& g) {
    const std::size_t n = g.num_nodes();
    auto lower_rank = [&](NodeId a, NodeId b) {
        auto da = g.neighbors(a).size(), db = g.neighbors(b).size();
        return da != db ? da < db : a < b;
    };
    std::vector<std::vector<NodeId>> out(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.neighbors(u))
            if (lower_rank(u, v)) out[u].push_back(v);
        std::sort(out[u].begin(), out[u].end());
    }
    return out;
}

std::uint64_t sorted_intersection_count(const std::vector<NodeId>& a,
                                        const std::vector<NodeId>& b) {
    std::uint64_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

}  // namespace

std::uint64_t count_triangles_serial(const UndirectedGraph& g) {
    auto out = oriented_adjacency(g);
    std::uint64_t total = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v : out[u])
            total += sorted_intersection_count(out[u], out[v]);
    return total;
}

std::uint64_t count_triangles(const UndirectedGraph& g) {
    auto out = oriented_adjacency(g);
    const auto n = static_cast<std::int64_t>(g.num_nodes());
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : total)
    for (std::int64_t u = 0; u < n; ++u)
        for (NodeId v : out[static_cast<std::size_t>(u)])
            total += sorted_intersection_count(out[static_cast<std::size_t>(u)], out[v]);
    return total;
}

std::uint64_t connected_triple_count(const UndirectedGraph& g) {
    std::uint64_t total = 0;
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        auto d = static_cast<std::uint64_t>(g.neighbors(i).size());
        total += d * d - d;
    }
    return total;
}

double transitivity_ratio(const UndirectedGraph& g) {
    std::uint64_t triples = connected_triple_count(g);
    if (triples == 0) return 0.0;
    return 6.0 * static_cast<double>(count_triangles(g)) / static_cast<double>(triples);
}

double local_clustering(const UndirectedGraph& g, NodeId i) {
    if (i >= g.num_nodes())
        throw std::out_of_range("local_clustering: node out of range");
    auto nb = g.neighbors(i);
    const std::size_t d = nb.size();
    if (d < 2) return 0.0;
    std::uint64_t internal = 0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            internal += g.has_edge(nb[a], nb[b]) ? 1 : 0;
    return static_cast<double>(internal) / (static_cast<double>(d) * (d - 1) / 2.0);
}

double avg_clustering(const UndirectedGraph& g) {
    const std::size_t n = g.num_nodes();
    if (n == 0) throw std::invalid_argument("avg_clustering: empty graph");
    double sum = 0.0;
    for (NodeId i = 0; i < n; ++i) sum += local_clustering(g, i);
    return sum / static_cast<double>(n);
}

GraphStats compute_stats(const UndirectedGraph& g) {
    GraphStats s;
    s.n = g.num_nodes();
    s.m = g.num_edges();
    s.triangles = count_triangles(g);
    s.two_stars = connected_triple_count(g);
    s.transitivity =
        s.two_stars == 0 ? 0.0 : 6.0 * static_cast<double>(s.triangles) / static_cast<double>(s.two_stars);
    s.avg_clustering = s.n == 0 ? 0.0 : avg_clustering(g);
    s.mean_degree = g.mean_degree();
    return s;
}

std::string stats_to_json(const GraphStats& s) {
    std::ostringstream os;
    os.precision(12);
    os << "{\"n\": " << s.n << ", \"m\": " << s.m << ", \"triangles\": " << s.triangles
       << ", \"two_stars\": " << s.two_stars << ", \"transitivity\": " << s.transitivity
       << ", \"avg_clustering\": " << s.avg_clustering << ", \"mean_degree\": " << s.mean_degree
       << "}";
    return os.str();
}

}  // namespace transclust

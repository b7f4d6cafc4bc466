#include "transclust/similarity.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace transclust {

double WeightedSimilarity::weight(NodeId i, NodeId j) const {
    std::size_t arc = base_->arc_index(i, j);
    if (arc == UndirectedGraph::npos)
        throw std::invalid_argument("weight: (i,j) is not an edge of the base graph");
    return arc_weights_[arc];
}

std::vector<WeightedSimilarity::Edge> WeightedSimilarity::edges() const {
    std::vector<Edge> out;
    out.reserve(base_->num_edges());
    for (NodeId i = 0; i < base_->num_nodes(); ++i) {
        auto nb = base_->neighbors(i);
        std::size_t arc = base_->offsets()[i];
        for (NodeId j : nb) {
            if (j > i) out.push_back({i, j, arc_weights_[arc]});
            ++arc;
        }
    }
    return out;
}

namespace {

template <typename PerEdge>
void fill_arc_weights(const UndirectedGraph& g, WeightedSimilarity& sim,
                      PerEdge per_edge, bool parallel) {
    const auto n = static_cast<std::int64_t>(g.num_nodes());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::int64_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<NodeId>(ii);
        auto nb = g.neighbors(i);
        std::size_t arc = g.offsets()[i];
        for (NodeId j : nb) {
            if (j > i) {
                double w = per_edge(i, j);
                sim.set_arc_weight(arc, w);
                // mirror arc (j,i) is owned by this edge too; writing it
                // from here keeps slots disjoint across iterations of i
                sim.set_arc_weight(g.arc_index(j, i), w);
            }
            ++arc;
        }
    }
}

double laplacian_edge_weight(const UndirectedGraph& g, NodeId i, NodeId j, double tau) {
    auto a = g.neighbors(i);
    auto b = g.neighbors(j);
    if (a.size() > b.size()) std::swap(a, b);
    const double di = static_cast<double>(g.neighbors(i).size()) + tau;
    const double dj = static_cast<double>(g.neighbors(j).size()) + tau;
    double sum = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    // ascending-k accumulation keeps the sum deterministic
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else {
            sum += 1.0 / (static_cast<double>(g.neighbors(*ia).size()) + tau);
            ++ia; ++ib;
        }
    }
    return sum / (di * dj);
}

}  // namespace

WeightedSimilarity triangle_support_serial(const UndirectedGraph& g) {
    WeightedSimilarity sim(g, WeightedSimilarity::Kind::TriangleCount);
    fill_arc_weights(g, sim,
                     [&](NodeId i, NodeId j) {
                         return static_cast<double>(g.common_neighbor_count(i, j));
                     },
                     false);
    return sim;
}

WeightedSimilarity triangle_support(const UndirectedGraph& g) {
    WeightedSimilarity sim(g, WeightedSimilarity::Kind::TriangleCount);
    fill_arc_weights(g, sim,
                     [&](NodeId i, NodeId j) {
                         return static_cast<double>(g.common_neighbor_count(i, j));
                     },
                     true);
    return sim;
}

WeightedSimilarity laplacian_support_serial(const UndirectedGraph& g, LaplacianConfig cfg) {
    if (cfg.tau < 0.0) throw std::invalid_argument("laplacian_support: tau < 0");
    WeightedSimilarity sim(g, WeightedSimilarity::Kind::Laplacian, cfg.tau);
    fill_arc_weights(g, sim,
                     [&](NodeId i, NodeId j) {
                         return laplacian_edge_weight(g, i, j, cfg.tau);
                     },
                     false);
    return sim;
}

WeightedSimilarity laplacian_support(const UndirectedGraph& g, LaplacianConfig cfg) {
    if (cfg.tau < 0.0) throw std::invalid_argument("laplacian_support: tau < 0");
    WeightedSimilarity sim(g, WeightedSimilarity::Kind::Laplacian, cfg.tau);
    fill_arc_weights(g, sim,
                     [&](NodeId i, NodeId j) {
                         return laplacian_edge_weight(g, i, j, cfg.tau);
                     },
                     true);
    return sim;
}

bool random_walk_equivalence_check(const UndirectedGraph& g, LaplacianConfig cfg) {
    if (cfg.tau < 0.0) throw std::invalid_argument("random_walk_equivalence_check: tau < 0");
    const std::size_t n = g.num_nodes();
    std::vector<double> dtau(n);
    for (NodeId i = 0; i < n; ++i)
        dtau[i] = static_cast<double>(g.neighbors(i).size()) + cfg.tau;

    double max_diff = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j : g.neighbors(i)) {
            // symmetric form: sum_k A_ik A_kj / (sqrt(di dk) sqrt(dk dj))
            //                 * A_ij / sqrt(di dj)
            // random-walk form: [L_RW L_RW]_{ij} * [L_RW^T]_{ij}
            //                 = sum_k A_ik A_kj / (di dk) * A_ji / dj
            double sym = 0.0;
            double rw = 0.0;
            auto a = g.neighbors(i);
            auto b = g.neighbors(j);
            auto ia = a.begin();
            auto ib = b.begin();
            while (ia != a.end() && ib != b.end()) {
                if (*ia < *ib) ++ia;
                else if (*ib < *ia) ++ib;
                else {
                    double dk = dtau[*ia];
                    sym += 1.0 / (std::sqrt(dtau[i] * dk) * std::sqrt(dk * dtau[j]));
                    rw += 1.0 / (dtau[i] * dk);
                    ++ia; ++ib;
                }
            }
            sym *= 1.0 / std::sqrt(dtau[i] * dtau[j]);
            rw *= 1.0 / dtau[j];
            max_diff = std::max(max_diff, std::abs(sym - rw));
        }
    }
    return max_diff <= 1e-12;
}

}  // namespace transclust

#include "transclust/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace transclust {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), NodeId{0});
    }
    NodeId find(NodeId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // smaller id as root
        parent_[b] = a;
        return true;
    }

private:
    std::vector<NodeId> parent_;
};

ClusterSet components_to_clusterset(std::size_t n, UnionFind& uf, double cut) {
    ClusterSet cs;
    cs.cut = cut;
    cs.label.assign(n, 0);
    std::vector<std::uint32_t> root_label(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (NodeId i = 0; i < n; ++i) {
        NodeId r = uf.find(i);
        if (root_label[r] == UINT32_MAX) {
            root_label[r] = next++;
            cs.blocks.emplace_back();
        }
        cs.label[i] = root_label[r];
        cs.blocks[root_label[r]].push_back(i);
    }
    return cs;
}

}  // namespace

std::vector<NodeId> local_trans(const WeightedSimilarity& sim, NodeId seed, double cut) {
    const UndirectedGraph& g = sim.base();
    if (seed >= g.num_nodes())
        throw std::out_of_range("local_trans: seed out of range");
    if (cut < 0.0) throw std::invalid_argument("local_trans: cut < 0");

    std::vector<char> in_set(g.num_nodes(), 0);
    std::vector<NodeId> frontier{seed};
    std::vector<NodeId> result{seed};
    in_set[seed] = 1;
    while (!frontier.empty()) {
        std::vector<NodeId> next;
        for (NodeId u : frontier) {
            auto nb = g.neighbors(u);
            std::size_t arc = g.offsets()[u];
            for (NodeId v : nb) {
                if (!in_set[v] && sim.arc_weight(arc) >= cut) {
                    in_set[v] = 1;
                    next.push_back(v);
                    result.push_back(v);
                }
                ++arc;
            }
        }
        frontier = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

Dendrogram build_dendrogram(const WeightedSimilarity& sim) {
    Dendrogram d;
    d.n = sim.base().num_nodes();
    auto edges = sim.edges();
    std::stable_sort(edges.begin(), edges.end(),
                     [](const WeightedSimilarity::Edge& a, const WeightedSimilarity::Edge& b) {
                         if (a.weight != b.weight) return a.weight > b.weight;
                         return std::pair{a.u, a.v} < std::pair{b.u, b.v};
                     });
    UnionFind uf(d.n);
    for (const auto& e : edges)
        if (uf.unite(e.u, e.v)) d.merges.push_back({e.u, e.v, e.weight});
    return d;
}

ClusterSet cut_dendrogram(const Dendrogram& d, double cut) {
    if (cut < 0.0) throw std::invalid_argument("cut_dendrogram: cut < 0");
    UnionFind uf(d.n);
    for (const auto& m : d.merges) {
        if (m.weight < cut) break;  // weights are non-increasing
        uf.unite(m.u, m.v);
    }
    return components_to_clusterset(d.n, uf, cut);
}

ClusterSet global_trans(const WeightedSimilarity& sim, double cut) {
    return cut_dendrogram(build_dendrogram(sim), cut);
}

}  // namespace transclust

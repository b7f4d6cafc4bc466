#ifndef TRANSCLUST_MODELS_HPP
#define TRANSCLUST_MODELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "transclust/graph.hpp"

namespace transclust {

/// Planted-partition model: K blocks of size s, in-probability p,
/// out-probability r. n = K*s; the planted set is the first block.
struct FourParamSBM {
    std::size_t K = 1;
    std::size_t s = 1;
    double p = 0.0;
    double r = 0.0;

    std::size_t n() const { return K * s; }
};

/// Background graph on the complement of the planted block: either an
/// Erdos-Renyi draw with a target mean degree, or a fixed graph supplied
/// by the caller (the adversarial case).
struct BackgroundSpec {
    enum class Variant { ErdosRenyi, Fixed };
    Variant variant = Variant::ErdosRenyi;
    double mean_degree = 0.0;                  // lambda, ErdosRenyi only
    std::optional<UndirectedGraph> fixed;      // Fixed only, exactly n nodes

    static BackgroundSpec erdos_renyi(double lambda) {
        return {Variant::ErdosRenyi, lambda, std::nullopt};
    }
    static BackgroundSpec fixed_graph(UndirectedGraph g) {
        return {Variant::Fixed, 0.0, std::move(g)};
    }
};

/// One planted block of size s embedded in an n-node background; edges
/// touching the block are Bernoulli(p_in) inside and Bernoulli(p_out)
/// across the boundary.
struct LocalSBM {
    std::size_t n = 0;
    std::size_t s = 1;
    double p_in = 1.0;
    double p_out = 0.0;
    BackgroundSpec background;
};

/// Degree-corrected variant: the background is drawn first and its degrees
/// d_j* set the cross-boundary probability min(d_j*/n, 1).
struct DegreeCorrectedLocalSBM {
    std::size_t n = 0;
    std::size_t s = 1;
    double p_in = 1.0;
    BackgroundSpec background;
};

struct SampleResult {
    UndirectedGraph graph;
    std::vector<NodeId> planted;  // S*, sorted
    std::uint64_t seed = 0;
};

/// Each unordered pair independent: probability p within a block, r across.
/// Planted set = first block (ids 0..s-1).
SampleResult sample_four_param(const FourParamSBM& m, std::uint64_t seed);

/// Background on ids 0..n-1, planted block on the last s ids. The three
/// edge groups (background, in-block, cross) use independent streams
/// derived from the seed.
SampleResult sample_local_sbm(const LocalSBM& m, std::uint64_t seed);
SampleResult sample_dc_local_sbm(const DegreeCorrectedLocalSBM& m, std::uint64_t seed);

/// Erdos-Renyi draw on n nodes with per-pair probability lambda/(n-1).
UndirectedGraph sample_erdos_renyi(std::size_t n, double lambda, std::uint64_t seed);

/// s*p + (n-s)*r.
double expected_degree(const FourParamSBM& m);

/// Limiting transitivity constant p^3 s^2 / (p^2 s^2 + c0^2 + 2 s p c0)
/// for the planted-partition model with r = c0/n.
double remark_constant(double p, std::size_t s, double c0);

struct PDeltaEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t two_stars = 0;
    std::uint64_t closed = 0;
};

/// Monte Carlo estimate of P(A_uv = 1 | A_iu = A_iv = 1): sample graphs,
/// enumerate 2-stars u-i-v, report the closed fraction. Throws if no
/// 2-star appears in any trial.
PDeltaEstimate estimate_p_delta(const FourParamSBM& m, std::size_t trials,
                                std::uint64_t seed);

}  // namespace transclust

#endif

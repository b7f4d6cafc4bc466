#include "transclust/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "transclust/metrics.hpp"
#include "transclust/rng.hpp"

namespace transclust {

namespace {

// colexicographic pair index: (i,j) with i < j maps to C(j,2) + i
std::pair<NodeId, NodeId> pair_from_index(std::uint64_t t) {
    auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
    while (j * (j - 1) / 2 > t) --j;
    while ((j + 1) * j / 2 <= t) ++j;
    auto i = t - j * (j - 1) / 2;
    return {static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

// Bernoulli(p) over all C(n,2) unordered pairs via geometric skipping.
template <typename Emit>
void sample_pairs(std::uint64_t n, double p, Rng& rng, Emit emit) {
    if (n < 2 || p <= 0.0) return;
    const std::uint64_t total = n * (n - 1) / 2;
    std::uint64_t t = rng.geometric_skip(p);
    while (t < total) {
        auto [i, j] = pair_from_index(t);
        emit(i, j);
        t += 1 + rng.geometric_skip(p);
    }
}

// Bernoulli(p) over an a-by-b grid of cross pairs.
template <typename Emit>
void sample_grid(std::uint64_t a, std::uint64_t b, double p, Rng& rng, Emit emit) {
    if (a == 0 || b == 0 || p <= 0.0) return;
    const std::uint64_t total = a * b;
    std::uint64_t t = rng.geometric_skip(p);
    while (t < total) {
        emit(static_cast<NodeId>(t / b), static_cast<NodeId>(t % b));
        t += 1 + rng.geometric_skip(p);
    }
}

std::vector<std::pair<NodeId, NodeId>> background_edges(const BackgroundSpec& bg,
                                                        std::size_t n, Rng rng) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (bg.variant == BackgroundSpec::Variant::Fixed) {
        if (!bg.fixed || bg.fixed->num_nodes() != n)
            throw std::invalid_argument("fixed background must have exactly n nodes");
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j : bg.fixed->neighbors(i))
                if (j > i) edges.emplace_back(i, j);
        return edges;
    }
    if (bg.mean_degree < 0.0)
        throw std::invalid_argument("background mean degree < 0");
    if (n >= 2) {
        // per-pair probability lambda/(n-1) makes sum A_ij / n concentrate at lambda
        double p = std::min(bg.mean_degree / static_cast<double>(n - 1), 1.0);
        sample_pairs(n, p, rng, [&](NodeId i, NodeId j) { edges.emplace_back(i, j); });
    }
    return edges;
}

}  // namespace

SampleResult sample_four_param(const FourParamSBM& m, std::uint64_t seed) {
    if (m.K < 1 || m.s < 1 || m.r < 0.0 || m.p < 0.0 || m.p > 1.0 || m.r > m.p)
        throw std::invalid_argument("four-parameter model: need 0 <= r <= p <= 1, K,s >= 1");
    const std::size_t n = m.n();
    Rng in_rng(seed, 1);
    Rng out_rng(seed, 2);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t b = 0; b < m.K; ++b) {
        const auto base = static_cast<NodeId>(b * m.s);
        for (std::size_t i = 0; i < m.s; ++i)
            for (std::size_t j = i + 1; j < m.s; ++j)
                if (in_rng.bernoulli(m.p))
                    edges.emplace_back(base + static_cast<NodeId>(i),
                                       base + static_cast<NodeId>(j));
    }
    sample_pairs(n, m.r, out_rng, [&](NodeId i, NodeId j) {
        if (i / m.s != j / m.s) edges.emplace_back(i, j);  // cross-block only
    });

    SampleResult res;
    res.graph = UndirectedGraph::from_edges(n, std::move(edges));
    res.planted.resize(m.s);
    std::iota(res.planted.begin(), res.planted.end(), NodeId{0});
    res.seed = seed;
    return res;
}

SampleResult sample_local_sbm(const LocalSBM& m, std::uint64_t seed) {
    if (m.s < 1 || m.p_in <= 0.0 || m.p_in > 1.0 || m.p_out < 0.0 || m.p_out > 1.0)
        throw std::invalid_argument("local SBM: need 0 < p_in <= 1, 0 <= p_out <= 1, s >= 1");
    const std::size_t total = m.n + m.s;
    const auto planted_base = static_cast<NodeId>(m.n);

    auto edges = background_edges(m.background, m.n, Rng(seed, 0));
    Rng in_rng(seed, 1);
    for (std::size_t i = 0; i < m.s; ++i)
        for (std::size_t j = i + 1; j < m.s; ++j)
            if (in_rng.bernoulli(m.p_in))
                edges.emplace_back(planted_base + static_cast<NodeId>(i),
                                   planted_base + static_cast<NodeId>(j));
    Rng cross_rng(seed, 2);
    sample_grid(m.s, m.n, m.p_out, cross_rng, [&](NodeId i, NodeId j) {
        edges.emplace_back(planted_base + i, j);
    });

    SampleResult res;
    res.graph = UndirectedGraph::from_edges(total, std::move(edges));
    res.planted.resize(m.s);
    std::iota(res.planted.begin(), res.planted.end(), planted_base);
    res.seed = seed;
    return res;
}

SampleResult sample_dc_local_sbm(const DegreeCorrectedLocalSBM& m, std::uint64_t seed) {
    if (m.s < 1 || m.p_in <= 0.0 || m.p_in > 1.0)
        throw std::invalid_argument("dc-local SBM: need 0 < p_in <= 1, s >= 1");
    const std::size_t total = m.n + m.s;
    const auto planted_base = static_cast<NodeId>(m.n);

    auto edges = background_edges(m.background, m.n, Rng(seed, 0));
    std::vector<std::uint32_t> dstar(m.n, 0);
    for (const auto& [u, v] : edges) {
        ++dstar[u];
        ++dstar[v];
    }

    Rng in_rng(seed, 1);
    for (std::size_t i = 0; i < m.s; ++i)
        for (std::size_t j = i + 1; j < m.s; ++j)
            if (in_rng.bernoulli(m.p_in))
                edges.emplace_back(planted_base + static_cast<NodeId>(i),
                                   planted_base + static_cast<NodeId>(j));

    Rng cross_rng(seed, 2);
    for (NodeId j = 0; j < m.n; ++j) {
        if (dstar[j] == 0) continue;
        double q = std::min(static_cast<double>(dstar[j]) / static_cast<double>(m.n), 1.0);
        for (std::size_t i = 0; i < m.s; ++i)
            if (cross_rng.bernoulli(q))
                edges.emplace_back(planted_base + static_cast<NodeId>(i), j);
    }

    SampleResult res;
    res.graph = UndirectedGraph::from_edges(total, std::move(edges));
    res.planted.resize(m.s);
    std::iota(res.planted.begin(), res.planted.end(), planted_base);
    res.seed = seed;
    return res;
}

UndirectedGraph sample_erdos_renyi(std::size_t n, double lambda, std::uint64_t seed) {
    auto edges = background_edges(BackgroundSpec::erdos_renyi(lambda), n, Rng(seed, 0));
    return UndirectedGraph::from_edges(n, std::move(edges));
}

double expected_degree(const FourParamSBM& m) {
    return static_cast<double>(m.s) * m.p + static_cast<double>(m.n() - m.s) * m.r;
}

double remark_constant(double p, std::size_t s, double c0) {
    if (p <= 0.0) throw std::invalid_argument("remark_constant: p must be > 0");
    if (s < 3) throw std::invalid_argument("remark_constant: s must be >= 3");
    if (c0 < 0.0) throw std::invalid_argument("remark_constant: c0 must be >= 0");
    const double ps = p * static_cast<double>(s);
    const double denom = ps * ps + c0 * c0 + 2.0 * ps * c0;
    if (denom == 0.0) throw std::invalid_argument("remark_constant: zero denominator");
    return p * ps * ps / denom;
}

PDeltaEstimate estimate_p_delta(const FourParamSBM& m, std::size_t trials,
                                std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("estimate_p_delta: trials < 1");
    PDeltaEstimate est;
    std::vector<double> fractions;
    Rng master(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        SampleResult sr = sample_four_param(m, master.derive(t).next_u64());
        std::uint64_t stars = 0;
        for (NodeId i = 0; i < sr.graph.num_nodes(); ++i) {
            auto d = static_cast<std::uint64_t>(sr.graph.neighbors(i).size());
            stars += d * (d - 1) / 2;  // unordered 2-stars centered at i
        }
        std::uint64_t closed = 3 * count_triangles(sr.graph);
        est.two_stars += stars;
        est.closed += closed;
        if (stars > 0)
            fractions.push_back(static_cast<double>(closed) / static_cast<double>(stars));
    }
    if (est.two_stars == 0)
        throw std::runtime_error("estimate_p_delta: no 2-stars observed in any trial");
    est.estimate = static_cast<double>(est.closed) / static_cast<double>(est.two_stars);
    if (fractions.size() > 1) {
        double mean = std::accumulate(fractions.begin(), fractions.end(), 0.0) /
                      static_cast<double>(fractions.size());
        double ss = 0.0;
        for (double f : fractions) ss += (f - mean) * (f - mean);
        est.std_error = std::sqrt(ss / static_cast<double>(fractions.size() - 1) /
                                  static_cast<double>(fractions.size()));
    }
    return est;
}

}  // namespace transclust

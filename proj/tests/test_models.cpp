#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "test_util.hpp"
#include "transclust/models.hpp"
#include "transclust/rng.hpp"

using namespace transclust;

namespace {

bool is_complete(const UndirectedGraph& g) {
    std::size_t n = g.num_nodes();
    return g.num_edges() == n * (n - 1) / 2;
}

// closed-form p_delta for the planted-partition model: mixture over the
// block patterns of (i, {u,v})
double analytic_p_delta(const FourParamSBM& m) {
    double s = static_cast<double>(m.s);
    double n = static_cast<double>(m.n());
    double K = static_cast<double>(m.K);
    double p = m.p, r = m.r;
    struct Case { double count, star, close; };
    Case cases[] = {
        {(s - 1) * (s - 2) / 2, p * p, p},                       // u,v in i's block
        {(s - 1) * (n - s), p * r, r},                           // one in, one out
        {(K - 1) * s * (s - 1) / 2, r * r, p},                   // both out, same block
        {(n - s) * (n - s - 1) / 2 - (K - 1) * s * (s - 1) / 2,  // both out, different
         r * r, r},
    };
    double num = 0.0, den = 0.0;
    for (const auto& c : cases) {
        num += c.count * c.star * c.close;
        den += c.count * c.star;
    }
    return num / den;
}

}  // namespace

TEST_CASE("sample_four_param degenerate probabilities") {
    auto k4 = sample_four_param({1, 4, 1.0, 0.0}, 1);
    CHECK(k4.graph.num_nodes() == 4);
    CHECK(is_complete(k4.graph));
    CHECK(k4.planted == std::vector<NodeId>{0, 1, 2, 3});

    auto two_k3 = sample_four_param({2, 3, 1.0, 0.0}, 2);
    CHECK(two_k3.graph.num_nodes() == 6);
    CHECK(two_k3.graph.num_edges() == 6);
    for (NodeId i = 0; i < 3; ++i)
        for (NodeId j = 3; j < 6; ++j) CHECK(!two_k3.graph.has_edge(i, j));
}

TEST_CASE("sample_four_param empirical mean degree") {
    FourParamSBM m{100, 10, 0.6, 0.002};
    CHECK(expected_degree(m) == doctest::Approx(7.98));
    // loop-free sampling: realized mean degree is (s-1)p + (n-s)r,
    // one in-block term below the self-loop-allowing closed form
    double expect = 9.0 * 0.6 + 990.0 * 0.002;
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        total += sample_four_param(m, seed).graph.mean_degree();
    CHECK(total / 50.0 == doctest::Approx(expect).epsilon(0.04));
}

TEST_CASE("sample_local_sbm degenerate cases") {
    LocalSBM iso{10, 3, 1.0, 0.0, BackgroundSpec::erdos_renyi(0.0)};
    auto sr = sample_local_sbm(iso, 3);
    CHECK(sr.graph.num_nodes() == 13);
    CHECK(sr.graph.num_edges() == 3);  // K3 on the planted ids, rest isolated
    CHECK(sr.planted == std::vector<NodeId>{10, 11, 12});

    LocalSBM dense{1, 5, 1.0, 1.0, BackgroundSpec::erdos_renyi(0.0)};
    auto k6 = sample_local_sbm(dense, 4);
    CHECK(k6.graph.num_nodes() == 6);
    CHECK(is_complete(k6.graph));
}

TEST_CASE("sample_local_sbm rejects wrong-size fixed background") {
    LocalSBM m{5, 2, 1.0, 0.0, BackgroundSpec::fixed_graph(testutil::complete_graph(3))};
    CHECK_THROWS_AS((void)sample_local_sbm(m, 0), std::invalid_argument);
}

TEST_CASE("fixed background is copied verbatim") {
    auto bg = testutil::complete_graph(4);
    LocalSBM m{4, 2, 1.0, 0.0, BackgroundSpec::fixed_graph(bg)};
    auto sr = sample_local_sbm(m, 5);
    for (NodeId i = 0; i < 4; ++i)
        for (NodeId j = i + 1; j < 4; ++j) CHECK(sr.graph.has_edge(i, j));
    CHECK(sr.graph.has_edge(4, 5));
}

TEST_CASE("samplers are reproducible and seed-sensitive") {
    LocalSBM m{200, 8, 0.7, 0.01, BackgroundSpec::erdos_renyi(3.0)};
    auto a = sample_local_sbm(m, 99);
    auto b = sample_local_sbm(m, 99);
    CHECK(a.graph == b.graph);
    auto c = sample_local_sbm(m, 100);
    CHECK(!(a.graph == c.graph));

    DegreeCorrectedLocalSBM dm{200, 8, 0.7, BackgroundSpec::erdos_renyi(3.0)};
    CHECK(sample_dc_local_sbm(dm, 7).graph == sample_dc_local_sbm(dm, 7).graph);
}

TEST_CASE("empirical pair-class frequencies match the model") {
    // in-block, cross and background classes, >= 1e4 pair draws each
    LocalSBM m{300, 60, 0.35, 0.02, BackgroundSpec::erdos_renyi(20.0)};
    std::size_t in_pairs = 0, in_edges = 0, cross_pairs = 0, cross_edges = 0;
    std::size_t bg_pairs = 0, bg_edges = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto sr = sample_local_sbm(m, seed);
        auto planted_base = static_cast<NodeId>(m.n);
        for (NodeId i = planted_base; i < sr.graph.num_nodes(); ++i)
            for (NodeId j = i + 1; j < sr.graph.num_nodes(); ++j) {
                ++in_pairs;
                in_edges += sr.graph.has_edge(i, j);
            }
        for (NodeId i = planted_base; i < sr.graph.num_nodes(); ++i)
            for (NodeId j = 0; j < planted_base; ++j) {
                ++cross_pairs;
                cross_edges += sr.graph.has_edge(i, j);
            }
        for (NodeId i = 0; i < planted_base; ++i)
            for (NodeId j = i + 1; j < planted_base; ++j) {
                ++bg_pairs;
                bg_edges += sr.graph.has_edge(i, j);
            }
    }
    auto check_freq = [](std::size_t edges, std::size_t pairs, double p) {
        REQUIRE(pairs >= 10000);
        double freq = static_cast<double>(edges) / static_cast<double>(pairs);
        double se = std::sqrt(p * (1.0 - p) / static_cast<double>(pairs));
        CHECK(std::abs(freq - p) <= 4.0 * se);
    };
    check_freq(in_edges, in_pairs, m.p_in);
    check_freq(cross_edges, cross_pairs, m.p_out);
    check_freq(bg_edges, bg_pairs, 20.0 / 299.0);
}

TEST_CASE("dc sampler cross frequency tracks d_j*/n") {
    DegreeCorrectedLocalSBM m{500, 40, 0.5, BackgroundSpec::erdos_renyi(8.0)};
    // background depends only on stream (seed,0); same seed keeps d_j* fixed
    std::uint64_t seed = 12;
    auto sr = sample_dc_local_sbm(m, seed);
    auto planted_base = static_cast<NodeId>(m.n);
    std::vector<std::uint32_t> dstar(m.n, 0);
    for (NodeId j = 0; j < planted_base; ++j)
        for (NodeId k : sr.graph.neighbors(j))
            if (k < planted_base) ++dstar[j];
    // all d_j* = 0 would mean no cross edges at all
    DegreeCorrectedLocalSBM empty{50, 5, 1.0, BackgroundSpec::erdos_renyi(0.0)};
    auto se = sample_dc_local_sbm(empty, 3);
    for (NodeId j = 0; j < 50; ++j)
        for (NodeId k : se.graph.neighbors(j)) CHECK(k < 50);

    // aggregate cross frequency ~ sum_j s*d_j*/n over planted pairs
    std::size_t cross = 0;
    for (NodeId i = planted_base; i < sr.graph.num_nodes(); ++i)
        for (NodeId j : sr.graph.neighbors(i))
            if (j < planted_base) ++cross;
    double expect = 0.0;
    for (auto d : dstar)
        expect += static_cast<double>(m.s) * std::min(1.0, static_cast<double>(d) / 500.0);
    CHECK(std::abs(static_cast<double>(cross) - expect) <= 4.0 * std::sqrt(expect) + 1.0);
}

TEST_CASE("expected_degree") {
    CHECK(expected_degree({1, 10, 0.5, 0.9}) == doctest::Approx(5.0));
    CHECK(expected_degree({100, 10, 0.6, 0.002}) == doctest::Approx(7.98));
    CHECK(expected_degree({3, 4, 0.0, 0.0}) == 0.0);
}

TEST_CASE("remark_constant") {
    CHECK(remark_constant(1.0, 3, 0.0) == doctest::Approx(1.0));
    CHECK(remark_constant(0.6, 10, 2.0) == doctest::Approx(0.3375));
    CHECK(remark_constant(0.5, 10, 0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)remark_constant(0.0, 10, 1.0), std::invalid_argument);
}

TEST_CASE("estimate_p_delta exact and degenerate cases") {
    auto est = estimate_p_delta({1, 5, 1.0, 0.0}, 3, 1);
    CHECK(est.estimate == 1.0);
    CHECK_THROWS((void)estimate_p_delta({2, 1, 1.0, 0.0}, 5, 1));
}

TEST_CASE("estimate_p_delta matches the analytic mixture") {
    FourParamSBM m{50, 10, 0.6, 0.002};
    auto est = estimate_p_delta(m, 200, 7);
    double target = analytic_p_delta(m);
    CHECK(std::abs(est.estimate - target) <= 3.0 * est.std_error + 1e-9);
}

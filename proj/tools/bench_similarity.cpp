// Compares the serial reference kernels against the OpenMP versions on a
// random graph and reports wall times plus a checksum agreement line.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "transclust/metrics.hpp"
#include "transclust/models.hpp"
#include "transclust/similarity.hpp"

using namespace transclust;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double weight_sum(const WeightedSimilarity& sim) {
    double s = 0.0;
    for (std::size_t a = 0; a < sim.base().arc_count(); ++a) s += sim.arc_weight(a);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 100000;
    double lambda = argc > 2 ? std::strtod(argv[2], nullptr) : 20.0;
    std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 42;

    UndirectedGraph g = sample_erdos_renyi(n, lambda, seed);
    std::cout << "graph: n=" << g.num_nodes() << " m=" << g.num_edges() << "\n";
#ifdef _OPENMP
    std::cout << "omp max threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP\n";
#endif

    auto t0 = std::chrono::steady_clock::now();
    auto tri_s = count_triangles_serial(g);
    double dt_count_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto tri_p = count_triangles(g);
    double dt_count_par = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto sim_s = triangle_support_serial(g);
    double dt_sup_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto sim_p = triangle_support(g);
    double dt_sup_par = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto lap_s = laplacian_support_serial(g, {g.mean_degree()});
    double dt_lap_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto lap_p = laplacian_support(g, {g.mean_degree()});
    double dt_lap_par = seconds_since(t0);

    std::cout << "count_triangles:    serial " << dt_count_serial << " s, parallel "
              << dt_count_par << " s, speedup " << dt_count_serial / dt_count_par << "x\n";
    std::cout << "triangle_support:   serial " << dt_sup_serial << " s, parallel "
              << dt_sup_par << " s, speedup " << dt_sup_serial / dt_sup_par << "x\n";
    std::cout << "laplacian_support:  serial " << dt_lap_serial << " s, parallel "
              << dt_lap_par << " s, speedup " << dt_lap_serial / dt_lap_par << "x\n";

    bool agree = tri_s == tri_p && weight_sum(sim_s) == weight_sum(sim_p) &&
                 weight_sum(lap_s) == weight_sum(lap_p);
    std::cout << "serial/parallel agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
    return agree ? 0 : 1;
}

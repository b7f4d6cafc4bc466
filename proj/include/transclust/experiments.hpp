#ifndef TRANSCLUST_EXPERIMENTS_HPP
#define TRANSCLUST_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "transclust/clustering.hpp"
#include "transclust/models.hpp"

namespace transclust {

struct RecoveryAlgorithm {
    enum class Similarity { Adjacency, Laplacian };
    Similarity similarity = Similarity::Adjacency;
    double cut = 1.0;
    bool cut_from_closed_form = false;  // Laplacian only: (2(s-1)p_in + 2λ + τ)^{-3}
    double tau = 0.0;
    bool tau_mean_degree = true;        // per-sample empirical mean degree
};

struct RecoveryConfig {
    std::variant<LocalSBM, DegreeCorrectedLocalSBM> model;
    RecoveryAlgorithm algorithm;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    double nominal_lambda = 0.0;        // λ fed to the closed-form cut
};

struct RecoveryReport {
    std::vector<bool> trial_success;        // all planted seeds recover S* exactly
    std::vector<bool> trial_success_single; // one random planted seed
    std::vector<double> trial_overlap;      // |result ∩ S*| / |result ∪ S*|, diagnostic
    double rate_all_seeds = 0.0;
    double rate_single_seed = 0.0;
    double std_error = 0.0;                 // binomial SE of rate_all_seeds
    double bound_term = 0.0;                // computable part of the failure bound
    double cut_used = 0.0;
    double wall_seconds = 0.0;
    std::string config_echo;
};

RecoveryReport run_recovery(const RecoveryConfig& cfg);

/// Computable (non-O) part of the recovery failure bound:
/// cut=1: ½ s² (1-p_in²)^{s-2};  cut=2: s³ (1-p_in²)^{s-3}.
double theorem2_bound(std::size_t s, double p_in, int cut);

struct TransitivityPoint {
    std::size_t n = 0;
    double lambda = 0.0;       // schedule value (vanishing runs)
    double mean_trans = 0.0;
    double std_error = 0.0;
    double target = 0.0;       // limit constant / expected value
};

struct TransitivityReport {
    std::vector<TransitivityPoint> points;
    std::vector<std::vector<double>> per_trial;  // trans(A) per trial per point
    double wall_seconds = 0.0;
    std::string config_echo;
};

/// Planted-partition schedule r = c0/n across n_values; target is the
/// limiting constant from remark_constant(p, s, c0).
TransitivityReport run_transitivity_limit(double p, std::size_t s, double c0,
                                          const std::vector<std::size_t>& n_values,
                                          std::size_t trials, std::uint64_t seed);

/// Erdos-Renyi schedule with per-n mean degree lambda_values[i]; the target
/// at each n is lambda/n (the ER closure probability).
TransitivityReport run_transitivity_vanishing(const std::vector<std::size_t>& n_values,
                                              const std::vector<double>& lambda_values,
                                              std::size_t trials, std::uint64_t seed);

struct ClusterSizeCurve {
    std::vector<double> cuts;
    std::vector<std::vector<std::size_t>> sizes;  // per cut: next ten after the largest
};

/// For each cut: global_trans, drop the single largest cluster, report the
/// sizes of the next ten (padded with 1s). One dendrogram, cuts replayed.
ClusterSizeCurve cluster_size_curve(const WeightedSimilarity& sim,
                                    const std::vector<double>& cuts);

}  // namespace transclust

#endif

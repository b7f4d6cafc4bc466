#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "transclust/clustering.hpp"
#include "transclust/experiments.hpp"
#include "transclust/graph.hpp"
#include "transclust/metrics.hpp"
#include "transclust/models.hpp"
#include "transclust/similarity.hpp"

using json = nlohmann::json;
using namespace transclust;

namespace {

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("TRANSCLUST_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) omp_set_num_threads(k);
    }
#endif
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

WeightedSimilarity build_similarity(const UndirectedGraph& g, const std::string& kind,
                                    std::optional<double> tau) {
    if (kind == "adjacency") return triangle_support(g);
    if (kind == "laplacian")
        return laplacian_support(g, {tau.value_or(g.mean_degree())});
    throw CLI::ValidationError("--sim must be 'adjacency' or 'laplacian'");
}

void emit_edge_csv(const UndirectedGraph& g, const WeightedSimilarity& sim,
                   std::ostream& out) {
    out.precision(12);
    out << "u,v,weight\n";
    for (const auto& e : sim.edges())
        out << g.original_id(e.u) << ',' << g.original_id(e.v) << ',' << e.weight << '\n';
}

BackgroundSpec background_from_json(const json& j) {
    std::string type = j.value("type", "er");
    if (type == "er") return BackgroundSpec::erdos_renyi(j.at("lambda").get<double>());
    if (type == "fixed")
        return BackgroundSpec::fixed_graph(load_edge_list_file(j.at("path").get<std::string>()));
    throw std::runtime_error("background type must be 'er' or 'fixed'");
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return json::parse(in);
}

int cmd_experiment(const std::string& kind, const std::string& config_path,
                   const std::string& out_path) {
    json cfg = load_config(config_path);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out.precision(12);
    json summary;
    summary["kind"] = kind;
    summary["config"] = cfg;

    if (kind == "recovery") {
        RecoveryConfig rc;
        const json& mj = cfg.at("model");
        std::string mtype = mj.at("type").get<std::string>();
        if (mtype == "local") {
            rc.model = LocalSBM{mj.at("n").get<std::size_t>(), mj.at("s").get<std::size_t>(),
                                mj.at("p_in").get<double>(), mj.at("p_out").get<double>(),
                                background_from_json(mj.at("background"))};
        } else if (mtype == "dclocal") {
            rc.model = DegreeCorrectedLocalSBM{mj.at("n").get<std::size_t>(),
                                               mj.at("s").get<std::size_t>(),
                                               mj.at("p_in").get<double>(),
                                               background_from_json(mj.at("background"))};
        } else {
            throw std::runtime_error("model type must be 'local' or 'dclocal'");
        }
        const json& aj = cfg.at("algorithm");
        std::string sim = aj.value("sim", "adjacency");
        rc.algorithm.similarity = sim == "laplacian"
                                      ? RecoveryAlgorithm::Similarity::Laplacian
                                      : RecoveryAlgorithm::Similarity::Adjacency;
        if (aj.contains("cut") && aj["cut"].is_string()) {
            if (aj["cut"].get<std::string>() != "theorem3")
                throw std::runtime_error("cut must be a number or 'theorem3'");
            rc.algorithm.cut_from_closed_form = true;
        } else {
            rc.algorithm.cut = aj.value("cut", 1.0);
        }
        if (aj.contains("tau") && aj["tau"].is_number()) {
            rc.algorithm.tau = aj["tau"].get<double>();
            rc.algorithm.tau_mean_degree = false;
        }
        rc.trials = cfg.value("trials", std::size_t{1});
        rc.master_seed = cfg.value("seed", std::uint64_t{0});
        rc.nominal_lambda = cfg.value("lambda", 0.0);

        RecoveryReport rep = run_recovery(rc);
        out << "trial,success_all_seeds,success_single_seed,overlap\n";
        for (std::size_t t = 0; t < rep.trial_success.size(); ++t)
            out << t << ',' << (rep.trial_success[t] ? 1 : 0) << ','
                << (rep.trial_success_single[t] ? 1 : 0) << ',' << rep.trial_overlap[t] << '\n';
        summary["rate_all_seeds"] = rep.rate_all_seeds;
        summary["rate_single_seed"] = rep.rate_single_seed;
        summary["std_error"] = rep.std_error;
        summary["bound_term"] = rep.bound_term;
        summary["cut_used"] = rep.cut_used;
        summary["wall_seconds"] = rep.wall_seconds;
        summary["config_echo"] = rep.config_echo;
    } else if (kind == "translimit" || kind == "transvanish") {
        std::size_t trials = cfg.value("trials", std::size_t{1});
        std::uint64_t seed = cfg.value("seed", std::uint64_t{0});
        auto n_values = cfg.at("n_values").get<std::vector<std::size_t>>();
        TransitivityReport rep;
        if (kind == "translimit") {
            rep = run_transitivity_limit(cfg.at("p").get<double>(),
                                         cfg.at("s").get<std::size_t>(),
                                         cfg.at("c0").get<double>(), n_values, trials, seed);
        } else {
            std::vector<double> lambdas;
            if (cfg.contains("lambda_values"))
                lambdas = cfg["lambda_values"].get<std::vector<double>>();
            else
                for (std::size_t n : n_values) lambdas.push_back(std::sqrt(static_cast<double>(n)));
            rep = run_transitivity_vanishing(n_values, lambdas, trials, seed);
        }
        out << "n,trial,transitivity\n";
        for (std::size_t p = 0; p < rep.points.size(); ++p)
            for (std::size_t t = 0; t < rep.per_trial[p].size(); ++t)
                out << rep.points[p].n << ',' << t << ',' << rep.per_trial[p][t] << '\n';
        json pts = json::array();
        for (const auto& p : rep.points)
            pts.push_back({{"n", p.n}, {"lambda", p.lambda}, {"mean_trans", p.mean_trans},
                           {"std_error", p.std_error}, {"target", p.target}});
        summary["points"] = pts;
        summary["wall_seconds"] = rep.wall_seconds;
        summary["config_echo"] = rep.config_echo;
    } else if (kind == "curve") {
        UndirectedGraph g = load_edge_list_file(cfg.at("in").get<std::string>());
        std::optional<double> tau;
        if (cfg.contains("tau") && cfg["tau"].is_number()) tau = cfg["tau"].get<double>();
        WeightedSimilarity sim = build_similarity(g, cfg.value("sim", "adjacency"), tau);
        auto cuts = cfg.at("cuts").get<std::vector<double>>();
        ClusterSizeCurve curve = cluster_size_curve(sim, cuts);
        out << "cut,rank,size\n";
        for (std::size_t c = 0; c < curve.cuts.size(); ++c)
            for (std::size_t k = 0; k < curve.sizes[c].size(); ++k)
                out << curve.cuts[c] << ',' << (k + 1) << ',' << curve.sizes[c][k] << '\n';
    } else {
        throw CLI::ValidationError(
            "--kind must be one of recovery|translimit|transvanish|curve");
    }

    if (!out_path.empty() && out_path != "-") {
        std::ofstream side(out_path + ".summary.json");
        side << summary.dump(2) << '\n';
    }
    return 0;
}

int cmd_simulate(const std::string& model, const std::string& params_path,
                 std::uint64_t seed, const std::string& out_path) {
    json pj = load_config(params_path);
    SampleResult sr;
    if (model == "four") {
        FourParamSBM m{pj.at("K").get<std::size_t>(), pj.at("s").get<std::size_t>(),
                       pj.at("p").get<double>(), pj.at("r").get<double>()};
        sr = sample_four_param(m, seed);
    } else if (model == "local") {
        LocalSBM m{pj.at("n").get<std::size_t>(), pj.at("s").get<std::size_t>(),
                   pj.at("p_in").get<double>(), pj.at("p_out").get<double>(),
                   background_from_json(pj.at("background"))};
        sr = sample_local_sbm(m, seed);
    } else if (model == "dclocal") {
        DegreeCorrectedLocalSBM m{pj.at("n").get<std::size_t>(), pj.at("s").get<std::size_t>(),
                                  pj.at("p_in").get<double>(),
                                  background_from_json(pj.at("background"))};
        sr = sample_dc_local_sbm(m, seed);
    } else {
        throw CLI::ValidationError("--model must be one of four|local|dclocal");
    }

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    save_edge_list(sr.graph, out);

    // realized background mean degree: edges with both endpoints outside S*
    std::vector<char> in_planted(sr.graph.num_nodes(), 0);
    for (NodeId i : sr.planted) in_planted[i] = 1;
    std::uint64_t bg_arc_sum = 0;
    std::size_t n_background = sr.graph.num_nodes() - sr.planted.size();
    for (NodeId i = 0; i < sr.graph.num_nodes(); ++i) {
        if (in_planted[i]) continue;
        for (NodeId j : sr.graph.neighbors(i))
            if (!in_planted[j]) ++bg_arc_sum;
    }
    json side;
    side["model"] = model;
    side["seed"] = seed;
    side["n_nodes"] = sr.graph.num_nodes();
    side["n_edges"] = sr.graph.num_edges();
    side["planted"] = sr.planted;
    side["realized_lambda"] =
        n_background == 0 ? 0.0
                          : static_cast<double>(bg_arc_sum) / static_cast<double>(n_background);
    if (!out_path.empty() && out_path != "-") {
        std::ofstream sf(out_path + ".json");
        sf << side.dump(2) << '\n';
    } else {
        std::cerr << side.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"triangle-support local/global graph clustering"};
    app.require_subcommand(1);

    std::string in_path, out_path, sim_kind = "adjacency";
    std::optional<double> tau;
    double cut = 1.0;
    std::uint64_t seed = 0;
    NodeId seed_node = 0;

    auto add_io = [&](CLI::App* sub, bool need_in = true) {
        if (need_in) sub->add_option("--in", in_path, "input edge-list file")->required();
        sub->add_option("--out", out_path, "output file (default stdout)");
    };
    auto add_sim = [&](CLI::App* sub) {
        sub->add_option("--sim", sim_kind, "similarity kind: adjacency|laplacian");
        sub->add_option("--tau", tau, "Laplacian regularizer (default: mean degree)");
    };

    auto* stats = app.add_subcommand("stats", "graph statistics as JSON");
    add_io(stats);

    auto* similarity = app.add_subcommand("similarity", "edge similarity weights as CSV");
    add_io(similarity);
    add_sim(similarity);

    auto* dendrogram = app.add_subcommand("dendrogram", "maximum spanning forest as CSV");
    add_io(dendrogram);
    add_sim(dendrogram);

    auto* local = app.add_subcommand("local", "seed-expansion cluster members");
    add_io(local);
    add_sim(local);
    local->add_option("--seed", seed_node, "seed node (original id)")->required();
    local->add_option("--cut", cut, "threshold")->required();

    auto* global = app.add_subcommand("global", "full clustering at a cut level");
    add_io(global);
    add_sim(global);
    global->add_option("--cut", cut, "threshold")->required();

    auto* curve = app.add_subcommand("curve", "cluster-size-vs-cut table");
    std::string config_path;
    curve->add_option("--config", config_path, "JSON config")->required();
    curve->add_option("--out", out_path, "output CSV");

    auto* simulate = app.add_subcommand("simulate", "draw a graph from a blockmodel");
    std::string model, params_path;
    simulate->add_option("--model", model, "four|local|dclocal")->required();
    simulate->add_option("--params", params_path, "JSON parameter file")->required();
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--out", out_path, "output edge-list path");

    auto* experiment = app.add_subcommand("experiment", "Monte Carlo harness");
    std::string kind;
    experiment->add_option("--kind", kind, "recovery|translimit|transvanish|curve")->required();
    experiment->add_option("--config", config_path, "JSON config")->required();
    experiment->add_option("--out", out_path, "output CSV");

    try {
        app.parse(argc, argv);

        if (stats->parsed()) {
            UndirectedGraph g = load_edge_list_file(in_path);
            std::ofstream file;
            open_output(file, out_path) << stats_to_json(compute_stats(g)) << '\n';
        } else if (similarity->parsed()) {
            UndirectedGraph g = load_edge_list_file(in_path);
            WeightedSimilarity sim = build_similarity(g, sim_kind, tau);
            std::ofstream file;
            emit_edge_csv(g, sim, open_output(file, out_path));
        } else if (dendrogram->parsed()) {
            UndirectedGraph g = load_edge_list_file(in_path);
            WeightedSimilarity sim = build_similarity(g, sim_kind, tau);
            Dendrogram d = build_dendrogram(sim);
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            out.precision(12);
            out << "u,v,weight\n";
            for (const auto& mg : d.merges)
                out << g.original_id(mg.u) << ',' << g.original_id(mg.v) << ','
                    << mg.weight << '\n';
        } else if (local->parsed()) {
            UndirectedGraph g = load_edge_list_file(in_path);
            WeightedSimilarity sim = build_similarity(g, sim_kind, tau);
            NodeId dense = 0;
            bool found = false;
            for (NodeId i = 0; i < g.num_nodes(); ++i)
                if (g.original_id(i) == seed_node) { dense = i; found = true; break; }
            if (!found) throw std::runtime_error("seed node not present in graph");
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            for (NodeId i : local_trans(sim, dense, cut)) out << g.original_id(i) << '\n';
        } else if (global->parsed()) {
            UndirectedGraph g = load_edge_list_file(in_path);
            WeightedSimilarity sim = build_similarity(g, sim_kind, tau);
            ClusterSet cs = global_trans(sim, cut);
            std::ofstream file;
            std::ostream& out = open_output(file, out_path);
            out << "node,cluster\n";
            for (NodeId i = 0; i < g.num_nodes(); ++i)
                out << g.original_id(i) << ',' << cs.label[i] << '\n';
        } else if (curve->parsed()) {
            return cmd_experiment("curve", config_path, out_path);
        } else if (simulate->parsed()) {
            return cmd_simulate(model, params_path, seed, out_path);
        } else if (experiment->parsed()) {
            return cmd_experiment(kind, config_path, out_path);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

// Command-line front end: ingest, generate, select, simulate, benchmark,
// oracle, estimate. Exit codes: 0 success, 1 bad input, 2 violated invariant.

#include "cosine/baselines.hpp"
#include "cosine/metrics.hpp"
#include "cosine/monte_carlo.hpp"
#include "cosine/rng.hpp"
#include "cosine/seed_select.hpp"
#include "cosine/signed_graph.hpp"
#include "cosine/synth.hpp"
#include "cosine/transition.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace cosine;

/// A library postcondition failed at runtime; maps to exit code 2.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    return parse_edge_list(in);
}

PartitionVector load_partitions(const std::string& path, int n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    return parse_partitions(in, n);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SeedSet load_seeds(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    if (has_suffix(path, ".json")) return read_seeds_json(in);
    if (has_suffix(path, ".csv")) return read_seeds_csv(in);
    throw InputError("seed file must end in .json or .csv: " + path);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path + " for writing");
    return out;
}

void save_seeds(const SeedSet& seeds, const std::string& path) {
    std::ofstream out = open_out(path);
    if (has_suffix(path, ".json")) {
        write_seeds_json(seeds, out);
    } else if (has_suffix(path, ".csv")) {
        write_seeds_csv(seeds, out);
    } else {
        throw InputError("seed file must end in .json or .csv: " + path);
    }
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::vector<std::string> kAlgoNames = {"cosinemax", "random", "degree", "indinfmax"};

SeedSet run_algo(const std::string& algo, const SignedGraph& g, const TransitionMatrix& tm,
                 const PartitionVector& rho, const CampaignConfig& cfg,
                 const std::optional<uint64_t>& rng_seed) {
    if (algo == "cosinemax") return cosinemax(tm, rho, cfg);
    if (algo == "degree") return degree_seeds(g, rho, cfg);
    if (algo == "indinfmax") return individual_infmax_seeds(tm, rho, cfg);
    if (algo == "random") {
        if (!rng_seed) throw InputError("--rng-seed is required for the random strategy");
        return random_seeds(rho, cfg, *rng_seed);
    }
    throw InputError("unknown algorithm: " + algo);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Opinion campaign toolkit for signed directed networks"};
    app.require_subcommand(1);
    app.fallthrough();

    int threads = 0;
    app.add_option("--threads", threads, "cap internal parallelism (env COSINE_THREADS)");
    auto apply_threads = [&threads]() {
        if (threads == 0) {
            if (const char* env = std::getenv("COSINE_THREADS")) threads = std::atoi(env);
        }
        if (threads > 0) Eigen::setNbThreads(threads);
    };

    // ingest
    std::string in_graph, in_parts;
    auto* ingest = app.add_subcommand("ingest", "parse a graph and print stats as JSON");
    ingest->add_option("--graph", in_graph, "edge list TSV")->required();
    ingest->add_option("--partitions", in_parts, "target groups TSV");
    ingest->callback([&]() {
        apply_threads();
        const SignedGraph g = load_graph(in_graph);
        if (in_parts.empty()) {
            std::cout << stats_to_json(graph_stats(g)) << '\n';
        } else {
            const PartitionVector rho = load_partitions(in_parts, g.node_count());
            std::cout << stats_to_json(graph_stats(g), &rho) << '\n';
        }
    });

    // generate
    std::string gen_kind, gen_prefix;
    int gen_n1 = -1, gen_n2 = -1, gen_n = -1;
    double gen_p_intra = -1.0, gen_p_inter = -1.0, gen_p_edge = -1.0, gen_p_negative = 0.5;
    double gen_w_lo = 0.0, gen_w_hi = 1.0;
    bool gen_strong = false;
    std::optional<uint64_t> gen_seed;
    auto* generate = app.add_subcommand("generate", "write a synthetic graph + partition pair");
    generate->add_option("--kind", gen_kind, "balanced | anti-balanced | random")->required();
    generate->add_option("--n1", gen_n1, "group 1 size (two-community kinds)");
    generate->add_option("--n2", gen_n2, "group 2 size (two-community kinds)");
    generate->add_option("--n", gen_n, "node count (random kind)");
    generate->add_option("--p-intra", gen_p_intra, "within-group edge probability");
    generate->add_option("--p-inter", gen_p_inter, "cross-group edge probability");
    generate->add_option("--p-edge", gen_p_edge, "edge probability (random kind)");
    generate->add_option("--p-negative", gen_p_negative, "negative sign probability (random kind)");
    generate->add_option("--w-lo", gen_w_lo, "weight magnitude lower bound (exclusive)");
    generate->add_option("--w-hi", gen_w_hi, "weight magnitude upper bound (inclusive)");
    generate->add_flag("--ensure-strong", gen_strong, "add a global cycle for strong connectivity");
    generate->add_option("--rng-seed", gen_seed, "generator seed")->required();
    generate->add_option("--out-prefix", gen_prefix, "writes <prefix>.edges.tsv and <prefix>.partitions.tsv")
        ->required();
    generate->callback([&]() {
        apply_threads();
        const WeightRange wr{gen_w_lo, gen_w_hi};
        std::optional<SignedGraph> graph;
        std::optional<PartitionVector> parts;
        if (gen_kind == "balanced" || gen_kind == "anti-balanced") {
            if (gen_n1 < 0 || gen_n2 < 0) {
                throw InputError("--n1 and --n2 are required for --kind " + gen_kind);
            }
            if (gen_p_intra < 0.0 || gen_p_inter < 0.0) {
                throw InputError("--p-intra and --p-inter are required for --kind " + gen_kind);
            }
            auto made = gen_kind == "balanced"
                            ? gen_balanced(gen_n1, gen_n2, gen_p_intra, gen_p_inter, wr,
                                           *gen_seed, gen_strong)
                            : gen_anti_balanced(gen_n1, gen_n2, gen_p_intra, gen_p_inter, wr,
                                                *gen_seed, gen_strong);
            graph.emplace(std::move(made.first));
            parts.emplace(std::move(made.second));
        } else if (gen_kind == "random") {
            if (gen_n < 0) throw InputError("--n is required for --kind random");
            if (gen_p_edge < 0.0) throw InputError("--p-edge is required for --kind random");
            graph.emplace(gen_random_signed(gen_n, gen_p_edge, gen_p_negative, *gen_seed));
        } else {
            throw InputError("unknown --kind: " + gen_kind);
        }

        std::ofstream edges_out = open_out(gen_prefix + ".edges.tsv");
        serialize_edge_list(*graph, edges_out);
        std::ofstream parts_out = open_out(gen_prefix + ".partitions.tsv");
        if (parts) serialize_partitions(*parts, parts_out);
        std::cout << gen_prefix << ".edges.tsv: " << graph->node_count() << " nodes, "
                  << graph->edge_count() << " edges\n";
    });

    // select
    std::string sel_graph, sel_parts, sel_algo, sel_out;
    int sel_t = -1, sel_k = -1;
    std::optional<uint64_t> sel_seed;
    auto* select = app.add_subcommand("select", "pick seed nodes with a named strategy");
    select->add_option("--graph", sel_graph)->required();
    select->add_option("--partitions", sel_parts)->required();
    select->add_option("--algo", sel_algo, "cosinemax | random | degree | indinfmax")->required();
    select->add_option("--t", sel_t, "campaign horizon")->required();
    select->add_option("--k", sel_k, "seed budget")->required();
    select->add_option("--rng-seed", sel_seed, "required for --algo random");
    select->add_option("--out", sel_out, "seed set file (.json or .csv)")->required();
    select->callback([&]() {
        apply_threads();
        const SignedGraph g = load_graph(sel_graph);
        const PartitionVector rho = load_partitions(sel_parts, g.node_count());
        const TransitionMatrix tm = TransitionMatrix::build(g);
        const CampaignConfig cfg{sel_t, sel_k};
        const SeedSet seeds = run_algo(sel_algo, g, tm, rho, cfg, sel_seed);
        save_seeds(seeds, sel_out);
        if (sel_algo == "cosinemax") {
            std::cout << "predicted objective: " << format_g17(predicted_objective(seeds)) << '\n';
        }
    });

    // simulate
    std::string sim_graph, sim_parts, sim_seeds, sim_out, sim_traj;
    int sim_tmax = -1;
    double sim_threshold = 0.5;
    auto* simulate = app.add_subcommand("simulate", "propagate a seed set and write metrics CSV");
    simulate->add_option("--graph", sim_graph)->required();
    simulate->add_option("--partitions", sim_parts)->required();
    simulate->add_option("--seeds", sim_seeds, "seed set file (.json or .csv)")->required();
    simulate->add_option("--t-max", sim_tmax, "final horizon")->required();
    simulate->add_option("--threshold", sim_threshold, "conviction threshold (default 0.5)");
    simulate->add_option("--out", sim_out, "metrics CSV path")->required();
    simulate->add_option("--trajectory", sim_traj, "optional per-node opinion CSV");
    simulate->callback([&]() {
        apply_threads();
        const SignedGraph g = load_graph(sim_graph);
        const PartitionVector rho = load_partitions(sim_parts, g.node_count());
        const TransitionMatrix tm = TransitionMatrix::build(g);
        const SeedSet seeds = load_seeds(sim_seeds);
        const auto reports = trajectory_report(tm, rho, seeds, sim_tmax, sim_threshold);
        std::ofstream out = open_out(sim_out);
        write_report_header(out);
        for (const auto& r : reports) write_report_row(out, "seeds", r, 0.0);
        if (!sim_traj.empty()) {
            std::ofstream traj = open_out(sim_traj);
            write_trajectory_csv(tm, seed_vector(seeds, g.node_count()), sim_tmax, traj);
        }
    });

    // benchmark
    std::string bm_graph, bm_parts, bm_out;
    std::string bm_algos = "cosinemax,random,degree,indinfmax";
    int bm_tmax = -1, bm_k = -1;
    double bm_threshold = 0.5;
    std::optional<uint64_t> bm_seed;
    auto* benchmark = app.add_subcommand(
        "benchmark", "select at every horizon 0..t-max per algorithm, timing each selection");
    benchmark->add_option("--graph", bm_graph)->required();
    benchmark->add_option("--partitions", bm_parts)->required();
    benchmark->add_option("--k", bm_k, "seed budget")->required();
    benchmark->add_option("--t-max", bm_tmax, "final horizon")->required();
    benchmark->add_option("--algos", bm_algos, "comma-separated strategy list");
    benchmark->add_option("--rng-seed", bm_seed, "base seed for the random strategy");
    benchmark->add_option("--threshold", bm_threshold, "conviction threshold (default 0.5)");
    benchmark->add_option("--out", bm_out, "combined metrics CSV")->required();
    benchmark->callback([&]() {
        apply_threads();
        const SignedGraph g = load_graph(bm_graph);
        const PartitionVector rho = load_partitions(bm_parts, g.node_count());
        const TransitionMatrix tm = TransitionMatrix::build(g);

        std::vector<std::string> algos;
        std::stringstream names(bm_algos);
        for (std::string name; std::getline(names, name, ',');) {
            if (name.empty()) continue;
            if (std::find(kAlgoNames.begin(), kAlgoNames.end(), name) == kAlgoNames.end()) {
                throw InputError("unknown algorithm: " + name);
            }
            algos.push_back(name);
        }
        if (algos.empty()) throw InputError("--algos named no strategies");
        if (bm_tmax < 0) throw InputError("--t-max must be non-negative");

        std::ofstream out = open_out(bm_out);
        write_report_header(out);
        for (const std::string& algo : algos) {
            for (int t = 0; t <= bm_tmax; ++t) {
                const CampaignConfig cfg{t, bm_k};
                std::optional<uint64_t> step_seed;
                if (bm_seed) step_seed = mix_seed(*bm_seed, static_cast<uint64_t>(t));
                const auto start = Clock::now();
                const SeedSet seeds = run_algo(algo, g, tm, rho, cfg, step_seed);
                const double runtime = ms_since(start);
                write_report_row(out, algo, report_at(tm, rho, seeds, t, bm_threshold), runtime);
            }
        }
    });

    // oracle
    std::string or_graph, or_parts;
    int or_t = -1, or_k = -1;
    auto* oracle = app.add_subcommand("oracle",
                                      "exhaustive optimum on a small instance, checked "
                                      "against the linear-time selection");
    oracle->add_option("--graph", or_graph)->required();
    oracle->add_option("--partitions", or_parts)->required();
    oracle->add_option("--t", or_t, "campaign horizon")->required();
    oracle->add_option("--k", or_k, "seed budget")->required();
    oracle->callback([&]() {
        apply_threads();
        const SignedGraph g = load_graph(or_graph);
        const PartitionVector rho = load_partitions(or_parts, g.node_count());
        const TransitionMatrix tm = TransitionMatrix::build(g);
        const CampaignConfig cfg{or_t, or_k};

        const BruteForceResult brute = brute_force_best(tm, rho, cfg);
        const SeedSet fast = cosinemax(tm, rho, cfg);
        const Scalar fast_objective = predicted_objective(fast);

        std::cout << "brute force optimum: " << format_g17(brute.objective) << '\n';
        std::cout << "optimal assignment:";
        for (const auto& e : brute.best.entries) {
            std::cout << " (" << e.node << ", " << to_string(e.opinion) << ')';
        }
        std::cout << '\n';
        std::cout << "fast selection objective: " << format_g17(fast_objective) << '\n';
        if (std::abs(brute.objective - fast_objective) > 1e-9) {
            throw InvariantViolation("objectives disagree beyond 1e-9");
        }
        std::cout << "agreement: objectives match within 1e-9\n";
    });

    // estimate
    std::string est_graph, est_seeds;
    int est_node = -1, est_t = -1;
    int64_t est_walks = 100000;
    std::optional<uint64_t> est_seed;
    auto* estimate = app.add_subcommand("estimate",
                                        "Monte-Carlo walk estimate of one node's opinion, "
                                        "with the matrix value for comparison");
    estimate->add_option("--graph", est_graph)->required();
    estimate->add_option("--seeds", est_seeds, "seed set file defining C_0")->required();
    estimate->add_option("--node", est_node, "node to estimate")->required();
    estimate->add_option("--t", est_t, "horizon")->required();
    estimate->add_option("--walks", est_walks, "number of walks (default 100000)");
    estimate->add_option("--rng-seed", est_seed, "walk seed")->required();
    estimate->callback([&]() {
        apply_threads();
        const SignedGraph g = load_graph(est_graph);
        const SeedSet seeds = load_seeds(est_seeds);
        const Vector c0 = seed_vector(seeds, g.node_count());
        const WalkEstimate walk = estimate_opinion(g, c0, est_node, est_t, est_walks, *est_seed);
        const TransitionMatrix tm = TransitionMatrix::build(g);
        const Vector ct = propagate_forward(tm, c0, est_t);
        nlohmann::json doc = {{"estimate", walk.estimate},
                              {"std_error", walk.std_error},
                              {"matrix_value", ct[est_node]}};
        std::cout << doc.dump(2) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "cosine/baselines.hpp"

#include "cosine/rng.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace cosine {

namespace {

std::vector<int> target_nodes(const PartitionVector& rho) {
    std::vector<int> nodes;
    nodes.reserve(static_cast<size_t>(rho.target_count()));
    for (int i = 0; i < rho.size(); ++i) {
        if (rho.label(i) != 0) nodes.push_back(i);
    }
    return nodes;
}

Opinion membership_opinion(const PartitionVector& rho, int node) {
    return rho.label(node) > 0 ? Opinion::O1 : Opinion::O2;
}

bool entry_before(const SeedEntry& a, const SeedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.node < b.node;
}

void validate(const CampaignConfig& cfg, int n) {
    if (cfg.horizon < 0) throw InputError("campaign horizon must be non-negative");
    if (cfg.budget < 1) throw InputError("seed budget must be at least 1");
    if (cfg.budget > n) {
        throw InputError("seed budget " + std::to_string(cfg.budget) + " exceeds node count " +
                         std::to_string(n));
    }
}

/// Top m candidates by descending score with ties to the lower id; candidates
/// arrive sorted by id, so a stable partial sort keeps the tie rule.
std::vector<int> top_by_score(const std::vector<int>& candidates, const Vector& score, size_t m) {
    std::vector<int> picked(candidates.begin(), candidates.end());
    std::stable_sort(picked.begin(), picked.end(),
                     [&](int a, int b) { return score[a] > score[b]; });
    if (picked.size() > m) picked.resize(m);
    return picked;
}

}  // namespace

SeedSet random_seeds(const PartitionVector& rho, const CampaignConfig& cfg, uint64_t rng_seed) {
    validate(cfg, rho.size());
    std::vector<int> pool = target_nodes(rho);
    if (static_cast<int>(pool.size()) < cfg.budget) {
        throw InputError("only " + std::to_string(pool.size()) + " targeted nodes for budget " +
                         std::to_string(cfg.budget));
    }

    Rng rng(rng_seed);
    const size_t k = static_cast<size_t>(cfg.budget);
    for (size_t i = 0; i < k; ++i) {
        const size_t j = i + static_cast<size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);

    SeedSet seeds;
    seeds.budget = cfg.budget;
    for (int node : pool) {
        seeds.entries.push_back(SeedEntry{node, membership_opinion(rho, node), 0.0});
    }
    std::sort(seeds.entries.begin(), seeds.entries.end(), entry_before);
    return seeds;
}

SeedSet degree_seeds(const SignedGraph& g, const PartitionVector& rho, const CampaignConfig& cfg) {
    if (rho.size() != g.node_count()) {
        throw InputError("partition covers " + std::to_string(rho.size()) + " nodes, graph has " +
                         std::to_string(g.node_count()));
    }
    validate(cfg, g.node_count());

    const std::vector<int> pool = target_nodes(rho);
    Vector degree(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) degree[i] = static_cast<Scalar>(g.out_degree(i));
    const auto picked = top_by_score(pool, degree, static_cast<size_t>(cfg.budget));

    SeedSet seeds;
    seeds.budget = cfg.budget;
    for (int node : picked) {
        seeds.entries.push_back(SeedEntry{node, membership_opinion(rho, node), degree[node]});
    }
    std::sort(seeds.entries.begin(), seeds.entries.end(), entry_before);
    return seeds;
}

SeedSet individual_infmax_seeds(const TransitionMatrix& tm, const PartitionVector& rho,
                                const CampaignConfig& cfg) {
    if (rho.size() != tm.node_count()) {
        throw InputError("partition covers " + std::to_string(rho.size()) + " nodes, graph has " +
                         std::to_string(tm.node_count()));
    }
    validate(cfg, tm.node_count());
    if (cfg.budget < 2) throw InputError("two-stage selection needs a budget of at least 2");

    const int n = tm.node_count();
    Vector rho_pos = Vector::Zero(n);
    Vector rho_neg = Vector::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (rho.label(i) > 0) rho_pos[i] = 1.0;
        if (rho.label(i) < 0) rho_neg[i] = -1.0;
    }

    const size_t half = static_cast<size_t>(cfg.budget / 2);
    const std::vector<int> pool = target_nodes(rho);

    const Vector stage1_score = propagate_reverse(tm, rho_pos, cfg.horizon);
    const std::vector<int> stage1 = top_by_score(pool, stage1_score, half);

    std::vector<bool> taken(static_cast<size_t>(n), false);
    for (int node : stage1) taken[static_cast<size_t>(node)] = true;
    std::vector<int> remaining;
    for (int node : pool) {
        if (!taken[static_cast<size_t>(node)]) remaining.push_back(node);
    }

    const Vector stage2_score = -propagate_reverse(tm, rho_neg, cfg.horizon);
    const std::vector<int> stage2 = top_by_score(remaining, stage2_score, half);

    SeedSet seeds;
    seeds.budget = cfg.budget;
    for (int node : stage1) {
        seeds.entries.push_back(SeedEntry{node, membership_opinion(rho, node), stage1_score[node]});
    }
    for (int node : stage2) {
        seeds.entries.push_back(SeedEntry{node, membership_opinion(rho, node), stage2_score[node]});
    }
    std::sort(seeds.entries.begin(), seeds.entries.end(), entry_before);
    return seeds;
}

}  // namespace cosine

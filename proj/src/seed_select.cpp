#include "cosine/seed_select.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace cosine {

namespace {

void validate_config(const CampaignConfig& cfg, int n) {
    if (cfg.horizon < 0) throw InputError("campaign horizon must be non-negative");
    if (cfg.budget < 1) throw InputError("seed budget must be at least 1");
    if (cfg.budget > n) {
        throw InputError("seed budget " + std::to_string(cfg.budget) + " exceeds node count " +
                         std::to_string(n));
    }
}

// Non-increasing score, ascending node id on ties.
bool entry_before(const SeedEntry& a, const SeedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.node < b.node;
}

void check_distinct(std::vector<SeedEntry>& entries) {
    std::vector<int> ids;
    ids.reserve(entries.size());
    for (const auto& e : entries) ids.push_back(e.node);
    std::sort(ids.begin(), ids.end());
    auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end()) {
        throw InputError("node " + std::to_string(*dup) + " appears twice in the seed set");
    }
}

std::string format_score(Scalar v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Opinion opinion_from_string(const std::string& s) {
    if (s == "O1") return Opinion::O1;
    if (s == "O2") return Opinion::O2;
    throw InputError("unknown opinion \"" + s + "\" (expected O1 or O2)");
}

}  // namespace

Vector seed_vector(const SeedSet& seeds, int n) {
    Vector c0 = Vector::Zero(n);
    for (const auto& e : seeds.entries) {
        if (e.node < 0 || e.node >= n) {
            throw InputError("seed node " + std::to_string(e.node) + " out of range for " +
                             std::to_string(n) + " nodes");
        }
        if (c0[e.node] != 0.0) {
            throw InputError("node " + std::to_string(e.node) + " appears twice in the seed set");
        }
        c0[e.node] = opinion_value(e.opinion);
    }
    return c0;
}

SeedSet cosinemax(const TransitionMatrix& tm, const PartitionVector& rho,
                  const CampaignConfig& cfg) {
    const int n = tm.node_count();
    validate_config(cfg, n);
    if (rho.target_count() == 0) throw InputError("partition selects no target nodes");

    const InfluenceScores scores = propagate_reverse(tm, rho, cfg.horizon);
    const Vector& eps = scores.values;

    // Keep the k best (larger |score|, then lower id) in a heap whose top is
    // the worst kept so far. Nodes arrive in id order, so an incoming tie on
    // |score| never displaces a kept node.
    using Cand = std::pair<Scalar, int>;  // (|score|, node)
    auto better = [](const Cand& a, const Cand& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    };
    std::priority_queue<Cand, std::vector<Cand>, decltype(better)> kept(better);
    for (int i = 0; i < n; ++i) {
        Cand cand{std::abs(eps[i]), i};
        if (static_cast<int>(kept.size()) < cfg.budget) {
            kept.push(cand);
        } else if (better(cand, kept.top())) {
            kept.pop();
            kept.push(cand);
        }
    }

    SeedSet result;
    result.budget = cfg.budget;
    result.entries.resize(kept.size());
    for (auto it = result.entries.rbegin(); it != result.entries.rend(); ++it) {
        const auto [mag, node] = kept.top();
        kept.pop();
        *it = SeedEntry{node, eps[node] > 0.0 ? Opinion::O1 : Opinion::O2, mag};
    }
    return result;
}

Scalar predicted_objective(const SeedSet& seeds) {
    Scalar total = 0.0;
    for (const auto& e : seeds.entries) total += e.score;
    return total;
}

BruteForceResult brute_force_best(const TransitionMatrix& tm, const PartitionVector& rho,
                                  const CampaignConfig& cfg) {
    const int n = tm.node_count();
    validate_config(cfg, n);
    if (n > 20) {
        throw InputError("brute force limited to 20 nodes, got " + std::to_string(n));
    }
    const int k = cfg.budget;
    double combos = 1.0;
    for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
    const double candidates = combos * std::ldexp(1.0, k);
    if (candidates > 1e6) {
        throw InputError("brute force instance too large: " + std::to_string(candidates) +
                         " candidate assignments exceed 1e6");
    }

    const Vector rho_vec = rho.to_vector();

    Scalar best_value = 0.0;
    std::vector<int> best_subset;
    uint32_t best_mask = 0;
    bool found = false;

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    Vector c0 = Vector::Zero(n);
    while (true) {
        for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
            c0.setZero();
            for (int j = 0; j < k; ++j) {
                c0[subset[j]] = (mask >> j) & 1u ? 1.0 : -1.0;
            }
            const Scalar value = rho_vec.dot(propagate_forward(tm, c0, cfg.horizon));
            if (!found || value > best_value) {
                found = true;
                best_value = value;
                best_subset = subset;
                best_mask = mask;
            }
        }
        // Next size-k subset in lexicographic order.
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }

    BruteForceResult result;
    result.objective = best_value;
    result.best.budget = k;
    for (int j = 0; j < k; ++j) {
        const Opinion op = (best_mask >> j) & 1u ? Opinion::O1 : Opinion::O2;
        const Scalar contribution =
            individual_influence(tm, rho, cfg.horizon, best_subset[j], op);
        result.best.entries.push_back(SeedEntry{best_subset[j], op, contribution});
    }
    std::sort(result.best.entries.begin(), result.best.entries.end(), entry_before);
    return result;
}

Scalar individual_influence(const TransitionMatrix& tm, const PartitionVector& rho, int steps,
                            int node, Opinion opinion) {
    const int n = tm.node_count();
    if (node < 0 || node >= n) {
        throw InputError("node " + std::to_string(node) + " out of range for " +
                         std::to_string(n) + " nodes");
    }
    Vector c0 = Vector::Zero(n);
    c0[node] = opinion_value(opinion);
    return rho.to_vector().dot(propagate_forward(tm, c0, steps));
}

void write_seeds_json(const SeedSet& seeds, std::ostream& out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : seeds.entries) {
        arr.push_back({{"node", e.node}, {"opinion", to_string(e.opinion)}, {"score", e.score}});
    }
    out << arr.dump(2) << '\n';
}

void write_seeds_csv(const SeedSet& seeds, std::ostream& out) {
    out << "node,opinion,score\n";
    for (const auto& e : seeds.entries) {
        out << e.node << ',' << to_string(e.opinion) << ',' << format_score(e.score) << '\n';
    }
}

SeedSet read_seeds_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("seed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InputError("seed JSON: expected a top-level array");

    SeedSet seeds;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("node") || !item.contains("opinion") ||
            !item.contains("score")) {
            throw InputError("seed JSON: each entry needs node, opinion, and score");
        }
        if (!item["node"].is_number_integer() || !item["opinion"].is_string() ||
            !item["score"].is_number()) {
            throw InputError("seed JSON: node must be an integer, opinion a string, "
                             "score a number");
        }
        SeedEntry e;
        e.node = item["node"].get<int>();
        if (e.node < 0) throw InputError("seed JSON: negative node id");
        e.opinion = opinion_from_string(item["opinion"].get<std::string>());
        e.score = item["score"].get<double>();
        seeds.entries.push_back(e);
    }
    check_distinct(seeds.entries);
    std::sort(seeds.entries.begin(), seeds.entries.end(), entry_before);
    seeds.budget = static_cast<int>(seeds.entries.size());
    return seeds;
}

SeedSet read_seeds_csv(std::istream& in) {
    std::string line;
    int64_t lineno = 0;
    auto fail = [&](const std::string& why) -> void {
        throw InputError("seed CSV line " + std::to_string(lineno) + ": " + why);
    };

    bool saw_header = false;
    SeedSet seeds;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "node,opinion,score") fail("expected header node,opinion,score");
            saw_header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) fail("expected node,opinion,score");

        SeedEntry e;
        const char* begin = line.data();
        auto [p1, ec1] = std::from_chars(begin, begin + c1, e.node);
        if (ec1 != std::errc{} || p1 != begin + c1 || e.node < 0) fail("bad node id");
        e.opinion = opinion_from_string(line.substr(c1 + 1, c2 - c1 - 1));
        auto [p2, ec2] = std::from_chars(begin + c2 + 1, begin + line.size(), e.score);
        if (ec2 != std::errc{} || p2 != begin + line.size()) fail("bad score");
        seeds.entries.push_back(e);
    }
    if (!saw_header) throw InputError("seed CSV: missing header node,opinion,score");
    check_distinct(seeds.entries);
    std::sort(seeds.entries.begin(), seeds.entries.end(), entry_before);
    seeds.budget = static_cast<int>(seeds.entries.size());
    return seeds;
}

}  // namespace cosine

#include "cosine/synth.hpp"

#include "cosine/rng.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cosine {

namespace {

void check_prob(double p, const char* name) {
    if (!(p > 0.0) || p > 1.0) {
        throw InputError(std::string(name) + " must be in (0, 1]");
    }
}

void check_weights(const WeightRange& wr) {
    if (!std::isfinite(wr.lo) || !std::isfinite(wr.hi) || wr.lo < 0.0 || wr.hi <= wr.lo) {
        throw InputError("weight range needs 0 <= lo < hi");
    }
}

Scalar magnitude(Rng& rng, const WeightRange& wr) {
    return wr.lo + rng.next_unit_pos() * (wr.hi - wr.lo);
}

/// Visits each index in [0, m) independently with probability p, in order,
/// jumping over the gaps between hits so the cost is the number of hits.
template <typename Fn>
void sample_indices(Rng& rng, uint64_t m, double p, Fn&& emit) {
    if (m == 0) return;
    if (p >= 1.0) {
        for (uint64_t idx = 0; idx < m; ++idx) emit(idx);
        return;
    }
    const double log_miss = std::log1p(-p);
    uint64_t idx = 0;
    while (true) {
        const double gap = std::floor(std::log(rng.next_unit_pos()) / log_miss);
        if (gap >= static_cast<double>(m)) return;
        idx += static_cast<uint64_t>(gap);
        if (idx >= m) return;
        emit(idx);
        ++idx;
    }
}

/// idx-th ordered pair (i, j), i != j, within a block of b nodes.
std::pair<int64_t, int64_t> pair_at(uint64_t idx, int64_t b) {
    const int64_t i = static_cast<int64_t>(idx / static_cast<uint64_t>(b - 1));
    const int64_t r = static_cast<int64_t>(idx % static_cast<uint64_t>(b - 1));
    return {i, r + (r >= i ? 1 : 0)};
}

std::pair<SignedGraph, PartitionVector> gen_two_community(int n1, int n2, double p_intra,
                                                          double p_inter,
                                                          const WeightRange& wr,
                                                          uint64_t rng_seed, bool ensure_strong,
                                                          Scalar intra_sign) {
    if (n1 < 1 || n2 < 1) throw InputError("both groups need at least one node");
    if (static_cast<int64_t>(n1) + n2 > std::numeric_limits<int>::max()) {
        throw InputError("group sizes overflow the node id range");
    }
    check_prob(p_intra, "p_intra");
    check_prob(p_inter, "p_inter");
    check_weights(wr);

    const int n = n1 + n2;
    const Scalar inter_sign = -intra_sign;
    Rng rng(rng_seed);
    std::vector<Edge> edges;

    const auto u = [](int v) { return static_cast<uint64_t>(v); };
    sample_indices(rng, u(n1) * u(n1 - 1), p_intra, [&](uint64_t idx) {
        const auto [i, j] = pair_at(idx, n1);
        edges.push_back(Edge{static_cast<int>(i), static_cast<int>(j),
                             intra_sign * magnitude(rng, wr)});
    });
    sample_indices(rng, u(n2) * u(n2 - 1), p_intra, [&](uint64_t idx) {
        const auto [i, j] = pair_at(idx, n2);
        edges.push_back(Edge{n1 + static_cast<int>(i), n1 + static_cast<int>(j),
                             intra_sign * magnitude(rng, wr)});
    });
    sample_indices(rng, u(n1) * u(n2), p_inter, [&](uint64_t idx) {
        const int i = static_cast<int>(idx / u(n2));
        const int j = n1 + static_cast<int>(idx % u(n2));
        edges.push_back(Edge{i, j, inter_sign * magnitude(rng, wr)});
    });
    sample_indices(rng, u(n2) * u(n1), p_inter, [&](uint64_t idx) {
        const int i = n1 + static_cast<int>(idx / u(n1));
        const int j = static_cast<int>(idx % u(n1));
        edges.push_back(Edge{i, j, inter_sign * magnitude(rng, wr)});
    });

    if (ensure_strong && n >= 2) {
        std::unordered_set<uint64_t> present;
        present.reserve(edges.size() * 2);
        const auto key = [](int src, int dst) {
            return static_cast<uint64_t>(src) << 32 | static_cast<uint32_t>(dst);
        };
        for (const Edge& e : edges) present.insert(key(e.src, e.dst));
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            if (present.count(key(i, j))) continue;
            const bool same_group = (i < n1) == (j < n1);
            const Scalar sign = same_group ? intra_sign : inter_sign;
            edges.push_back(Edge{i, j, sign * magnitude(rng, wr)});
        }
    }

    std::vector<int8_t> labels(static_cast<size_t>(n), int8_t{-1});
    for (int i = 0; i < n1; ++i) labels[static_cast<size_t>(i)] = 1;
    return {SignedGraph::from_edges(n, std::move(edges)), PartitionVector(std::move(labels))};
}

}  // namespace

std::pair<SignedGraph, PartitionVector> gen_balanced(int n1, int n2, double p_intra,
                                                     double p_inter, const WeightRange& weights,
                                                     uint64_t rng_seed, bool ensure_strong) {
    return gen_two_community(n1, n2, p_intra, p_inter, weights, rng_seed, ensure_strong, 1.0);
}

std::pair<SignedGraph, PartitionVector> gen_anti_balanced(int n1, int n2, double p_intra,
                                                          double p_inter,
                                                          const WeightRange& weights,
                                                          uint64_t rng_seed, bool ensure_strong) {
    return gen_two_community(n1, n2, p_intra, p_inter, weights, rng_seed, ensure_strong, -1.0);
}

SignedGraph gen_random_signed(int n, double p_edge, double p_negative, uint64_t rng_seed) {
    if (n < 2) throw InputError("need at least two nodes");
    check_prob(p_edge, "p_edge");
    if (!(p_negative >= 0.0) || p_negative > 1.0) {
        throw InputError("p_negative must be in [0, 1]");
    }

    const WeightRange wr;
    Rng rng(rng_seed);
    std::vector<Edge> edges;
    sample_indices(rng, static_cast<uint64_t>(n) * static_cast<uint64_t>(n - 1), p_edge,
                   [&](uint64_t idx) {
                       const auto [i, j] = pair_at(idx, n);
                       const Scalar sign = rng.bernoulli(p_negative) ? -1.0 : 1.0;
                       edges.push_back(Edge{static_cast<int>(i), static_cast<int>(j),
                                            sign * magnitude(rng, wr)});
                   });
    return SignedGraph::from_edges(n, std::move(edges));
}

}  // namespace cosine

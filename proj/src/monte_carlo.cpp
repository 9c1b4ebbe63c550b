#include "cosine/monte_carlo.hpp"

#include "cosine/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace cosine {

WalkEstimate estimate_opinion(const SignedGraph& g, const Vector& c0, int node, int steps,
                              int64_t walks, uint64_t rng_seed) {
    const int n = g.node_count();
    if (c0.size() != n) {
        throw InputError("opinion vector has " + std::to_string(c0.size()) +
                         " entries, graph has " + std::to_string(n) + " nodes");
    }
    if (node < 0 || node >= n) {
        throw InputError("node " + std::to_string(node) + " out of range for " +
                         std::to_string(n) + " nodes");
    }
    if (steps < 0) throw InputError("steps must be non-negative");
    if (walks < 1) throw InputError("need at least one walk");

    const SparseMatrix& adj = g.adjacency();
    const auto* offsets = adj.outerIndexPtr();
    const auto* columns = adj.innerIndexPtr();
    const Scalar* weights = adj.valuePtr();

    // Per-node running totals of |weight|, so an edge draw is one uniform
    // variate plus a binary search.
    std::vector<Scalar> cumulative(static_cast<size_t>(adj.nonZeros()));
    for (int i = 0; i < n; ++i) {
        Scalar run = 0.0;
        for (auto idx = offsets[i]; idx < offsets[i + 1]; ++idx) {
            run += std::abs(weights[idx]);
            cumulative[static_cast<size_t>(idx)] = run;
        }
    }

    double mean = 0.0;
    double m2 = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    double highest = -std::numeric_limits<double>::infinity();

    for (int64_t w = 0; w < walks; ++w) {
        Rng rng(mix_seed(rng_seed, static_cast<uint64_t>(w)));
        int cur = node;
        double sign = 1.0;
        for (int s = 0; s < steps; ++s) {
            const auto begin = offsets[cur];
            const auto end = offsets[cur + 1];
            if (begin == end) break;  // sinks keep their opinion forever
            const Scalar r = rng.next_unit() * cumulative[static_cast<size_t>(end - 1)];
            auto idx = std::upper_bound(cumulative.data() + begin, cumulative.data() + end, r) -
                       cumulative.data();
            if (idx == end) idx = end - 1;  // guard against r rounding up to the total
            if (weights[idx] < 0.0) sign = -sign;
            cur = columns[idx];
        }

        const double x = sign * c0[cur];
        lowest = std::min(lowest, x);
        highest = std::max(highest, x);
        const double delta = x - mean;
        mean += delta / static_cast<double>(w + 1);
        m2 += delta * (x - mean);
    }

    if (lowest == highest) return WalkEstimate{lowest, 0.0};
    WalkEstimate out;
    out.estimate = mean;
    out.std_error = std::sqrt(std::max(m2, 0.0) /
                              (static_cast<double>(walks) * static_cast<double>(walks - 1)));
    return out;
}

}  // namespace cosine

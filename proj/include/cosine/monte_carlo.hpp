#pragma once

#include "cosine/signed_graph.hpp"

#include <cstdint>

namespace cosine {

struct WalkEstimate {
    Scalar estimate = 0.0;
    Scalar std_error = 0.0;
};

/// Stochastic cross-check of one node's step-t opinion, independent of the
/// matrix code path: N random walks start at the node, each step moving along
/// an outgoing edge with probability proportional to |weight| (staying put on
/// sinks) and flipping a running sign on every negative edge; each walk
/// contributes sign * c0(end node). Returns the sample mean and its standard
/// error (exactly 0 when every walk agrees). Walks are seeded individually
/// from (rng_seed, walk index), so the result does not depend on evaluation
/// order.
WalkEstimate estimate_opinion(const SignedGraph& g, const Vector& c0, int node, int steps,
                              int64_t walks, uint64_t rng_seed);

}  // namespace cosine

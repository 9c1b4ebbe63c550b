#pragma once

#include "cosine/signed_graph.hpp"

#include <cstdint>
#include <utility>

namespace cosine {

/// Magnitude range for generated weights; samples land in (lo, hi], so the
/// default keeps every magnitude strictly positive.
struct WeightRange {
    Scalar lo = 0.0;
    Scalar hi = 1.0;
};

/// Two-community graph whose sign structure follows the partition: edges
/// inside a community are positive and edges across are negative. Nodes
/// 0..n1-1 form group 1 (label +1), the rest group 2 (label -1). Each ordered
/// pair becomes an edge independently with the given probability (p_intra
/// within, p_inter across, both in (0,1]). With ensure_strong, a directed
/// cycle through all nodes is added (skipping already-sampled links) so the
/// result is one strongly connected component.
std::pair<SignedGraph, PartitionVector> gen_balanced(int n1, int n2, double p_intra,
                                                     double p_inter, const WeightRange& weights,
                                                     uint64_t rng_seed, bool ensure_strong);

/// Mirror image of gen_balanced: negative inside communities, positive across.
std::pair<SignedGraph, PartitionVector> gen_anti_balanced(int n1, int n2, double p_intra,
                                                          double p_inter,
                                                          const WeightRange& weights,
                                                          uint64_t rng_seed, bool ensure_strong);

/// Unstructured test fodder: each ordered pair becomes an edge with
/// probability p_edge, negative with probability p_negative, magnitude in
/// (0, 1].
SignedGraph gen_random_signed(int n, double p_edge, double p_negative, uint64_t rng_seed);

}  // namespace cosine

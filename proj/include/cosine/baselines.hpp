#pragma once

#include "cosine/seed_select.hpp"
#include "cosine/signed_graph.hpp"

#include <cstdint>

namespace cosine {

// Comparison strategies. All three draw candidates from the targeted nodes
// (group 1 and group 2 members) and plant idea O1 on group-1 seeds and O2 on
// group-2 seeds. They may return fewer than k entries when the candidate pool
// runs dry; entry scores are strategy-specific (0 for random, out-degree for
// degree, stage score for the two-stage strategy) and sorted non-increasing.

/// k distinct targeted nodes drawn uniformly without replacement.
/// Throws InputError when fewer than k nodes are targeted.
SeedSet random_seeds(const PartitionVector& rho, const CampaignConfig& cfg, uint64_t rng_seed);

/// The targeted nodes with the highest out-degrees (ties to the lower id).
SeedSet degree_seeds(const SignedGraph& g, const PartitionVector& rho, const CampaignConfig& cfg);

/// Two independent single-idea selections, floor(k/2) seeds each: stage one
/// ranks targets by their horizon-t influence on group 1 alone (signed score,
/// descending), stage two by the negated influence on group 2 alone, skipping
/// stage-one picks. Requires k >= 2; odd k leaves one slot unused.
SeedSet individual_infmax_seeds(const TransitionMatrix& tm, const PartitionVector& rho,
                                const CampaignConfig& cfg);

}  // namespace cosine

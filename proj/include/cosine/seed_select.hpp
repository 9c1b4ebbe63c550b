#pragma once

#include "cosine/transition.hpp"

#include <iosfwd>
#include <vector>

namespace cosine {

struct SeedEntry {
    int node = 0;
    Opinion opinion = Opinion::O1;
    Scalar score = 0.0;  // |influence| of this seed at the campaign horizon
};

/// Up to k distinct nodes with their planted ideas. Entries are kept in
/// non-increasing score order (ties by ascending node id); every node appears
/// once, so the O1 and O2 halves are disjoint.
struct SeedSet {
    std::vector<SeedEntry> entries;
    int budget = 0;
};

struct CampaignConfig {
    int horizon = 0;  // t >= 0
    int budget = 1;   // 1 <= k <= n
};

/// Dense C_0 with +-1 at the seeds. Throws on out-of-range or repeated nodes.
Vector seed_vector(const SeedSet& seeds, int n);

/// Exact top-k selection: scores every node by its horizon-t influence
/// rho^T P^t in one reverse propagation, keeps the k largest magnitudes with
/// a size-k min-heap, and plants idea O1 where the score is positive and O2
/// otherwise (zero counts as O2). Ties on |score| go to the lower node id.
/// The selected set maximizes rho . C_t over all size-k seed sets and idea
/// assignments, and its achieved objective equals the sum of entry scores.
SeedSet cosinemax(const TransitionMatrix& tm, const PartitionVector& rho,
                  const CampaignConfig& cfg);

/// Predicted objective of a selection: the sum of its entry scores.
Scalar predicted_objective(const SeedSet& seeds);

struct BruteForceResult {
    Scalar objective = 0.0;
    SeedSet best;
};

/// Exhaustive optimum over all size-k node subsets and all 2^k idea
/// assignments, each candidate evaluated by forward-simulating its seed
/// vector. Guarded to n <= 20 and C(n,k) 2^k <= 1e6; throws InputError
/// beyond that.
BruteForceResult brute_force_best(const TransitionMatrix& tm, const PartitionVector& rho,
                                  const CampaignConfig& cfg);

/// rho . C_t when the campaign consists of the single given seed; equals the
/// node's reverse-propagation score up to sign.
Scalar individual_influence(const TransitionMatrix& tm, const PartitionVector& rho, int steps,
                            int node, Opinion opinion);

// Seed set interchange: a JSON array [{"node":..,"opinion":"O1","score":..}]
// or a CSV table "node,opinion,score". Readers restore the score ordering and
// reject repeated nodes; the budget is taken to be the number of entries.
void write_seeds_json(const SeedSet& seeds, std::ostream& out);
void write_seeds_csv(const SeedSet& seeds, std::ostream& out);
SeedSet read_seeds_json(std::istream& in);
SeedSet read_seeds_csv(std::istream& in);

}  // namespace cosine

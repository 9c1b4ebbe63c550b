#pragma once

#include "cosine/seed_select.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cosine {

/// Per-step evaluation of a campaign against the target partition.
struct EffectivenessReport {
    int t = 0;
    Scalar epsilon = 0.0;           // rho . C_t
    Scalar expected_correct = 0.0;  // sum of winning probabilities over convinced targets
    std::optional<Scalar> influence_pct;  // 100 * epsilon / T_t; empty when |T_t| < 1e-12
    Scalar all_target_effectiveness = 0.0;  // T_t, the all-targets-as-seeds epsilon
};

/// Expected number of correctly influenced targets: group-1 nodes count when
/// their O1 probability (1+C)/2 exceeds the threshold, group-2 nodes when
/// (1-C)/2 does; each convinced node contributes that probability.
Scalar expected_correct(const Vector& c, const PartitionVector& rho, Scalar threshold = 0.5);

/// Campaign effectiveness at horizon t as a percentage of the all-targets-as-
/// seeds run. Empty when that reference T_t is within 1e-12 of zero. Negative
/// T_t yields a signed ratio; values above 100 are possible when the
/// reference run self-cancels.
std::optional<Scalar> influence_pct(const TransitionMatrix& tm, const PartitionVector& rho,
                                    const SeedSet& seeds, int t);

/// Metrics at a single horizon; seed vector and reference vector are
/// propagated side by side in one pass.
EffectivenessReport report_at(const TransitionMatrix& tm, const PartitionVector& rho,
                              const SeedSet& seeds, int t, Scalar threshold = 0.5);

/// Metrics for every t in 0..t_max from one forward pass.
std::vector<EffectivenessReport> trajectory_report(const TransitionMatrix& tm,
                                                   const PartitionVector& rho,
                                                   const SeedSet& seeds, int t_max,
                                                   Scalar threshold = 0.5);

// CSV schema: t,algorithm,epsilon,expected_correct,influence_pct,T_t,
// runtime_ms,warnings. An undefined influence_pct is an empty cell; a
// negative T_t puts negative_T in warnings.
void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const std::string& algorithm,
                      const EffectivenessReport& report, double runtime_ms);

}  // namespace cosine

#include "cosine/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>

namespace cosine {

namespace {

constexpr Scalar kUndefinedTolerance = 1e-12;

void check_pair(const TransitionMatrix& tm, const PartitionVector& rho) {
    if (rho.size() != tm.node_count()) {
        throw InputError("partition covers " + std::to_string(rho.size()) + " nodes, graph has " +
                         std::to_string(tm.node_count()));
    }
}

EffectivenessReport make_report(int t, const Vector& seed_state, const Vector& target_state,
                                const Vector& rho_vec, const PartitionVector& rho,
                                Scalar threshold) {
    EffectivenessReport r;
    r.t = t;
    r.epsilon = rho_vec.dot(seed_state);
    r.expected_correct = expected_correct(seed_state, rho, threshold);
    r.all_target_effectiveness = rho_vec.dot(target_state);
    if (std::abs(r.all_target_effectiveness) >= kUndefinedTolerance) {
        // Grouped so the all-targets run divides two identical doubles and
        // lands on exactly 100.
        r.influence_pct = 100.0 * (r.epsilon / r.all_target_effectiveness);
    }
    return r;
}

}  // namespace

Scalar expected_correct(const Vector& c, const PartitionVector& rho, Scalar threshold) {
    if (rho.size() != c.size()) {
        throw InputError("opinion vector has " + std::to_string(c.size()) +
                         " entries, partition covers " + std::to_string(rho.size()));
    }
    Scalar total = 0.0;
    for (int i = 0; i < rho.size(); ++i) {
        const int8_t label = rho.label(i);
        if (label == 0) continue;
        const Scalar win = label > 0 ? (1.0 + c[i]) / 2.0 : (1.0 - c[i]) / 2.0;
        if (win > threshold) total += win;
    }
    return total;
}

std::optional<Scalar> influence_pct(const TransitionMatrix& tm, const PartitionVector& rho,
                                    const SeedSet& seeds, int t) {
    return report_at(tm, rho, seeds, t).influence_pct;
}

EffectivenessReport report_at(const TransitionMatrix& tm, const PartitionVector& rho,
                              const SeedSet& seeds, int t, Scalar threshold) {
    check_pair(tm, rho);
    if (t < 0) throw InputError("horizon must be non-negative");
    const int n = tm.node_count();

    Matrix state(n, 2);
    state.col(0) = seed_vector(seeds, n);
    state.col(1) = rho.to_vector();
    const Vector rho_vec = state.col(1);

    Matrix next(n, 2);
    for (int step = 0; step < t; ++step) {
        step_forward(tm, state, next);
        state.swap(next);
    }
    return make_report(t, state.col(0), state.col(1), rho_vec, rho, threshold);
}

std::vector<EffectivenessReport> trajectory_report(const TransitionMatrix& tm,
                                                   const PartitionVector& rho,
                                                   const SeedSet& seeds, int t_max,
                                                   Scalar threshold) {
    check_pair(tm, rho);
    if (t_max < 0) throw InputError("horizon must be non-negative");
    const int n = tm.node_count();

    Matrix state(n, 2);
    state.col(0) = seed_vector(seeds, n);
    state.col(1) = rho.to_vector();
    const Vector rho_vec = state.col(1);

    std::vector<EffectivenessReport> reports;
    reports.reserve(static_cast<size_t>(t_max) + 1);
    reports.push_back(make_report(0, state.col(0), state.col(1), rho_vec, rho, threshold));

    Matrix next(n, 2);
    for (int t = 1; t <= t_max; ++t) {
        step_forward(tm, state, next);
        state.swap(next);
        reports.push_back(make_report(t, state.col(0), state.col(1), rho_vec, rho, threshold));
    }
    return reports;
}

void write_report_header(std::ostream& out) {
    out << "t,algorithm,epsilon,expected_correct,influence_pct,T_t,runtime_ms,warnings\n";
}

void write_report_row(std::ostream& out, const std::string& algorithm,
                      const EffectivenessReport& report, double runtime_ms) {
    char runtime[32];
    std::snprintf(runtime, sizeof(runtime), "%.3f", runtime_ms);
    out << report.t << ',' << algorithm << ',' << format_g17(report.epsilon) << ','
        << format_g17(report.expected_correct) << ',';
    if (report.influence_pct) out << format_g17(*report.influence_pct);
    out << ',' << format_g17(report.all_target_effectiveness) << ',' << runtime << ',';
    if (report.influence_pct && report.all_target_effectiveness < 0.0) out << "negative_T";
    out << '\n';
}

}  // namespace cosine

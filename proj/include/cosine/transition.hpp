#pragma once

#include "cosine/signed_graph.hpp"
#include "cosine/types.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace cosine {

/// Row-normalized signed operator P = D^-1 A, where D holds the absolute
/// out-weight sums. Same CSR sparsity as A; every non-sink row has absolute
/// sum 1 and entry signs matching A. Rows of sink nodes (zero out-degree)
/// are empty and act as identity during propagation: the node retains its
/// opinion and a random walk parked there stays put. Immutable after build,
/// safe to share across concurrent propagations.
class TransitionMatrix {
public:
    static TransitionMatrix build(const SignedGraph& g);

    int node_count() const { return static_cast<int>(matrix_.rows()); }
    std::int64_t nonzero_count() const { return matrix_.nonZeros(); }

    const SparseMatrix& matrix() const { return matrix_; }
    const std::vector<int>& sink_nodes() const { return sinks_; }

private:
    friend TransitionMatrix load_transition(std::istream& in);

    SparseMatrix matrix_;
    std::vector<int> sinks_;
};

/// Per-node influence on the campaign objective at the given horizon:
/// values[i] is the component i of rho^T P^t, i.e. what one unit of initial
/// opinion at node i contributes to rho . C_t.
struct InfluenceScores {
    Vector values;
    int horizon = 0;
};

/// One diffusion step for every column of `cur`: next = P cur, with sink rows
/// copied through unchanged. Accumulation is plain double sums in CSR storage
/// order, so a run is bit-reproducible.
template <class Plain>
void step_forward(const TransitionMatrix& tm, const Plain& cur, Plain& next) {
    next.noalias() = tm.matrix() * cur;
    for (int s : tm.sink_nodes()) next.row(s) = cur.row(s);
}

/// Adjoint step: next = P^T cur plus the sink self-retention terms.
template <class Plain>
void step_reverse(const TransitionMatrix& tm, const Plain& cur, Plain& next) {
    next.noalias() = tm.matrix().transpose() * cur;
    for (int s : tm.sink_nodes()) next.row(s) += cur.row(s);
}

using StepCallback = std::function<void(int step, const Vector& values)>;

/// C_t = P^t c0, one sparse product per step; P^t itself is never formed.
/// The optional callback streams C_1 .. C_t so trajectories never need O(n t)
/// storage.
Vector propagate_forward(const TransitionMatrix& tm, Vector c0, int steps,
                         const StepCallback& on_step = {});

/// Column-wise variant: every column of c0 is propagated in the same pass.
Matrix propagate_forward_multi(const TransitionMatrix& tm, Matrix c0, int steps);

/// start^T P^t as a column vector (iterated adjoint products).
Vector propagate_reverse(const TransitionMatrix& tm, Vector start, int steps);

/// Influence scores rho^T P^t for every node, as used by the seed selectors.
InfluenceScores propagate_reverse(const TransitionMatrix& tm, const PartitionVector& rho,
                                  int steps);

/// Binary snapshot of P for fast reload: fixed header (magic, n, nnz), then
/// the raw CSR arrays as 64-bit offsets/indices and doubles. Sink nodes are
/// recovered from the empty rows.
void save_transition(const TransitionMatrix& tm, std::ostream& out);
TransitionMatrix load_transition(std::istream& in);

/// Streams `t,node,value` CSV rows for C_0 .. C_t.
void write_trajectory_csv(const TransitionMatrix& tm, const Vector& c0, int steps,
                          std::ostream& out);

}  // namespace cosine

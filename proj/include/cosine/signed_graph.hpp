#pragma once

#include "cosine/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace cosine {

/// One directed edge: j's influence on i has strength |weight| and the
/// weight's sign tells whether i trusts (+) or distrusts (-) j.
struct Edge {
    int src = 0;
    int dst = 0;
    Scalar weight = 0.0;
};

/// Immutable signed, weighted, directed graph. Adjacency is kept in compressed
/// sparse row order (by source node, targets sorted). Weights are finite and
/// nonzero; a nonzero entry is what encodes edge existence.
class SignedGraph {
public:
    /// Validates and builds. Throws InputError on out-of-range ids, zero or
    /// non-finite weights, or duplicate (src, dst) pairs. Runs in O(|E| + n).
    static SignedGraph from_edges(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.nonZeros()); }
    std::int64_t positive_count() const { return positive_count_; }
    std::int64_t negative_count() const { return negative_count_; }

    int out_degree(int node) const {
        return static_cast<int>(adj_.outerIndexPtr()[node + 1] - adj_.outerIndexPtr()[node]);
    }
    bool is_sink(int node) const { return out_degree(node) == 0; }

    /// Signed adjacency A in CSR layout. A+ and A- are the positive/negative
    /// entry filters of this matrix; they are never stored separately.
    const SparseMatrix& adjacency() const { return adj_; }

    /// Edges in (src, dst) order, matching the CSR layout.
    std::vector<Edge> edges() const;

private:
    SignedGraph() = default;

    int n_ = 0;
    SparseMatrix adj_;
    std::int64_t positive_count_ = 0;
    std::int64_t negative_count_ = 0;
};

/// Target-group labels: +1 for V1, -1 for V2, 0 for nodes the campaign ignores.
/// One label per node, so V1 and V2 are disjoint by construction.
class PartitionVector {
public:
    PartitionVector() = default;
    explicit PartitionVector(std::vector<std::int8_t> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    std::int8_t label(int node) const { return labels_[node]; }
    const std::vector<std::int8_t>& labels() const { return labels_; }

    std::int64_t v1_count() const { return v1_count_; }
    std::int64_t v2_count() const { return v2_count_; }
    std::int64_t target_count() const { return v1_count_ + v2_count_; }

    /// rho as a dense real vector.
    Vector to_vector() const;

private:
    std::vector<std::int8_t> labels_;
    std::int64_t v1_count_ = 0;
    std::int64_t v2_count_ = 0;
};

/// Reads a tab-separated edge list: `src <TAB> dst <TAB> weight` per line,
/// lines starting with '#' ignored. Node count is max id + 1. Throws
/// InputError with the offending line number on malformed input, zero or
/// non-finite weights, duplicate edges, or an edge-less stream.
SignedGraph parse_edge_list(std::istream& in);

/// Writes the graph back in the same TSV format, weights with enough digits
/// to round-trip bit-exactly.
void serialize_edge_list(const SignedGraph& g, std::ostream& out);

/// Reads `node <TAB> group` lines with group in {1, 2}; unlisted nodes get
/// label 0. Throws InputError on ids >= n, repeated nodes, or bad groups.
PartitionVector parse_partitions(std::istream& in, int n);

void serialize_partitions(const PartitionVector& p, std::ostream& out);

struct StatsReport {
    int n = 0;
    std::int64_t edges = 0;
    std::int64_t positive = 0;
    std::int64_t negative = 0;
    std::int64_t sinks = 0;
    std::map<int, std::int64_t> out_degree_histogram;
};

StatsReport graph_stats(const SignedGraph& g);

/// JSON rendering of the stats; includes target-group sizes when a partition
/// vector is supplied.
std::string stats_to_json(const StatsReport& s, const PartitionVector* parts = nullptr);

/// Compacts arbitrary sparse node ids to dense 0-based ones, preserving edge
/// order. Returns the remapped edges plus the old ids indexed by new id.
std::pair<std::vector<Edge>, std::vector<std::int64_t>>
remap_ids(const std::vector<std::pair<std::int64_t, std::int64_t>>& id_pairs,
          const std::vector<Scalar>& weights);

}  // namespace cosine

#include "cosine/signed_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

namespace cosine {

namespace {

// Stable counting sort of edges by the given key; O(|E| + n).
void counting_sort(std::vector<Edge>& edges, int n, int Edge::*key) {
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) ++offsets[static_cast<std::size_t>(e.*key) + 1];
    for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    std::vector<Edge> sorted(edges.size());
    for (const Edge& e : edges) sorted[offsets[e.*key]++] = e;
    edges.swap(sorted);
}

}  // namespace

SignedGraph SignedGraph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw InputError("graph must have at least one node");
    for (const Edge& e : edges) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
            throw InputError("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                             ") out of range for n=" + std::to_string(n));
        }
        if (!std::isfinite(e.weight) || e.weight == 0.0) {
            throw InputError("edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
                             ") has zero or non-finite weight");
        }
    }

    counting_sort(edges, n, &Edge::dst);
    counting_sort(edges, n, &Edge::src);
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].src == edges[i - 1].src && edges[i].dst == edges[i - 1].dst) {
            throw InputError("duplicate edge (" + std::to_string(edges[i].src) + ", " +
                             std::to_string(edges[i].dst) + ")");
        }
    }

    SignedGraph g;
    g.n_ = n;
    g.adj_.resize(n, n);
    g.adj_.reserve(static_cast<Eigen::Index>(edges.size()));
    int row = -1;
    for (const Edge& e : edges) {
        while (row < e.src) g.adj_.startVec(++row);
        g.adj_.insertBack(e.src, e.dst) = e.weight;
        if (e.weight > 0) ++g.positive_count_; else ++g.negative_count_;
    }
    while (row < n - 1) g.adj_.startVec(++row);
    g.adj_.finalize();
    return g;
}

std::vector<Edge> SignedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(adj_.nonZeros()));
    for (int i = 0; i < n_; ++i) {
        for (SparseMatrix::InnerIterator it(adj_, i); it; ++it) {
            out.push_back({i, static_cast<int>(it.col()), it.value()});
        }
    }
    return out;
}

PartitionVector::PartitionVector(std::vector<std::int8_t> labels) : labels_(std::move(labels)) {
    for (std::int8_t l : labels_) {
        if (l == 1) ++v1_count_;
        else if (l == -1) ++v2_count_;
        else if (l != 0) throw InputError("partition labels must be -1, 0, or +1");
    }
}

Vector PartitionVector::to_vector() const {
    Vector v(size());
    for (int i = 0; i < size(); ++i) v[i] = labels_[i];
    return v;
}

namespace {

const char* skip_blanks(const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p;
}

bool blank_or_comment(const std::string& line) {
    const char* p = skip_blanks(line.data(), line.data() + line.size());
    return p == line.data() + line.size() || *p == '#' || *p == '\r';
}

[[noreturn]] void fail_line(std::int64_t lineno, const std::string& why) {
    throw InputError("line " + std::to_string(lineno) + ": " + why);
}

template <class T>
const char* parse_number(const char* p, const char* end, T& out, std::int64_t lineno,
                         const char* what) {
    p = skip_blanks(p, end);
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{}) fail_line(lineno, std::string("cannot parse ") + what);
    return next;
}

void expect_line_end(const char* p, const char* end, std::int64_t lineno) {
    p = skip_blanks(p, end);
    if (p != end && !(*p == '\r' && p + 1 == end)) {
        fail_line(lineno, "trailing characters after last field");
    }
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::int64_t lineno = 0;
    std::int64_t max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        std::int64_t src = 0, dst = 0;
        double w = 0.0;
        p = parse_number(p, end, src, lineno, "source id");
        p = parse_number(p, end, dst, lineno, "target id");
        p = parse_number(p, end, w, lineno, "weight");
        expect_line_end(p, end, lineno);
        if (src < 0 || dst < 0) fail_line(lineno, "node ids must be non-negative");
        if (src > INT32_MAX || dst > INT32_MAX) fail_line(lineno, "node id too large");
        if (!std::isfinite(w) || w == 0.0) fail_line(lineno, "weight must be finite and nonzero");
        edges.push_back({static_cast<int>(src), static_cast<int>(dst), w});
        max_id = std::max({max_id, src, dst});
    }
    if (edges.empty()) throw InputError("empty edge list: graph must have at least one edge");
    return SignedGraph::from_edges(static_cast<int>(max_id) + 1, std::move(edges));
}

namespace {

void print_weight(std::ostream& out, Scalar w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    out << buf;
}

}  // namespace

void serialize_edge_list(const SignedGraph& g, std::ostream& out) {
    const SparseMatrix& a = g.adjacency();
    for (int i = 0; i < g.node_count(); ++i) {
        for (SparseMatrix::InnerIterator it(a, i); it; ++it) {
            out << i << '\t' << it.col() << '\t';
            print_weight(out, it.value());
            out << '\n';
        }
    }
}

PartitionVector parse_partitions(std::istream& in, int n) {
    std::vector<std::int8_t> labels(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        std::int64_t node = 0, group = 0;
        p = parse_number(p, end, node, lineno, "node id");
        p = parse_number(p, end, group, lineno, "group");
        expect_line_end(p, end, lineno);
        if (node < 0 || node >= n) {
            fail_line(lineno, "node id " + std::to_string(node) + " out of range for n=" +
                                  std::to_string(n));
        }
        if (group != 1 && group != 2) fail_line(lineno, "group must be 1 or 2");
        if (seen[node]) {
            fail_line(lineno, "node " + std::to_string(node) +
                                  " listed twice; target groups must be disjoint");
        }
        seen[node] = true;
        labels[node] = group == 1 ? 1 : -1;
    }
    return PartitionVector(std::move(labels));
}

void serialize_partitions(const PartitionVector& p, std::ostream& out) {
    for (int i = 0; i < p.size(); ++i) {
        if (p.label(i) == 1) out << i << "\t1\n";
        else if (p.label(i) == -1) out << i << "\t2\n";
    }
}

StatsReport graph_stats(const SignedGraph& g) {
    StatsReport s;
    s.n = g.node_count();
    s.edges = g.edge_count();
    s.positive = g.positive_count();
    s.negative = g.negative_count();
    for (int i = 0; i < g.node_count(); ++i) {
        int d = g.out_degree(i);
        if (d == 0) ++s.sinks;
        ++s.out_degree_histogram[d];
    }
    return s;
}

std::string stats_to_json(const StatsReport& s, const PartitionVector* parts) {
    nlohmann::json j;
    j["n"] = s.n;
    j["edges"] = s.edges;
    j["positive"] = s.positive;
    j["negative"] = s.negative;
    j["sinks"] = s.sinks;
    auto hist = nlohmann::json::array();
    for (const auto& [degree, count] : s.out_degree_histogram) {
        hist.push_back(nlohmann::json::array({degree, count}));
    }
    j["out_degree_histogram"] = hist;
    if (parts != nullptr) {
        j["v1"] = parts->v1_count();
        j["v2"] = parts->v2_count();
    }
    return j.dump();
}

std::pair<std::vector<Edge>, std::vector<std::int64_t>>
remap_ids(const std::vector<std::pair<std::int64_t, std::int64_t>>& id_pairs,
          const std::vector<Scalar>& weights) {
    if (id_pairs.size() != weights.size()) throw InputError("id pair / weight count mismatch");
    std::unordered_map<std::int64_t, int> dense;
    std::vector<std::int64_t> original;
    auto intern = [&](std::int64_t id) {
        auto [it, inserted] = dense.emplace(id, static_cast<int>(original.size()));
        if (inserted) original.push_back(id);
        return it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(id_pairs.size());
    for (std::size_t i = 0; i < id_pairs.size(); ++i) {
        int src = intern(id_pairs[i].first);
        int dst = intern(id_pairs[i].second);
        edges.push_back({src, dst, weights[i]});
    }
    return {std::move(edges), std::move(original)};
}

}  // namespace cosine

#pragma once

// Reference implementations used to cross-check the library. The dense model
// below is written against plain nested vectors, straight from an edge list,
// and shares no propagation code with the code under test.

#include "cosine/rng.hpp"
#include "cosine/signed_graph.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace refmodel {

/// Dense row-normalized transition table. Sinks get an explicit self-loop,
/// which is the same convention the sparse code implements by copying sink
/// rows forward.
struct DenseModel {
    int n;
    std::vector<std::vector<double>> p;

    DenseModel(int n_, const std::vector<cosine::Edge>& edges)
        : n(n_), p(static_cast<size_t>(n_), std::vector<double>(static_cast<size_t>(n_), 0.0)) {
        std::vector<double> total(static_cast<size_t>(n_), 0.0);
        for (const auto& e : edges) total[static_cast<size_t>(e.src)] += std::fabs(e.weight);
        for (const auto& e : edges) {
            p[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)] += e.weight;
        }
        for (size_t i = 0; i < p.size(); ++i) {
            if (total[i] == 0.0) {
                p[i][i] = 1.0;
                continue;
            }
            for (double& v : p[i]) v /= total[i];
        }
    }

    std::vector<double> forward(std::vector<double> c, int t) const {
        for (int s = 0; s < t; ++s) {
            std::vector<double> next(static_cast<size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    next[static_cast<size_t>(i)] +=
                        p[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                        c[static_cast<size_t>(j)];
                }
            }
            c = std::move(next);
        }
        return c;
    }

    std::vector<double> reverse(std::vector<double> row, int t) const {
        for (int s = 0; s < t; ++s) {
            std::vector<double> next(static_cast<size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    next[static_cast<size_t>(j)] +=
                        row[static_cast<size_t>(i)] *
                        p[static_cast<size_t>(i)][static_cast<size_t>(j)];
                }
            }
            row = std::move(next);
        }
        return row;
    }
};

inline cosine::Vector to_eigen(const std::vector<double>& v) {
    cosine::Vector out(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
    return out;
}

inline std::vector<double> from_eigen(const cosine::Vector& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

/// Random test instance: every ordered pair becomes an edge with probability
/// p_edge; magnitudes stay away from zero so row sums are well conditioned.
inline std::vector<cosine::Edge> random_edges(cosine::Rng& rng, int n, double p_edge,
                                              double p_negative) {
    std::vector<cosine::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || rng.next_unit() >= p_edge) continue;
            double w = 0.25 + rng.next_unit() * 1.75;
            if (rng.next_unit() < p_negative) w = -w;
            edges.push_back(cosine::Edge{i, j, w});
        }
    }
    return edges;
}

/// Random labels with a guaranteed member in each target group.
inline std::vector<std::int8_t> random_labels(cosine::Rng& rng, int n) {
    std::vector<std::int8_t> labels(static_cast<size_t>(n), 0);
    for (auto& l : labels) {
        const double u = rng.next_unit();
        l = u < 0.4 ? std::int8_t{1} : u < 0.8 ? std::int8_t{-1} : std::int8_t{0};
    }
    labels[0] = 1;
    if (n > 1) labels[1] = -1;
    return labels;
}

/// The worked example used throughout the doc comments: node 0 trusts 1,
/// distrusts 2; nodes 1 and 2 reinforce each other.
inline std::vector<cosine::Edge> example_edges() {
    return {{0, 1, 1.0}, {0, 2, -1.0}, {1, 2, 2.0}, {2, 1, 1.0}};
}

}  // namespace refmodel

#include "cosine/signed_graph.hpp"
#include "cosine/transition.hpp"

#include "oracle_utils.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace cosine;

TEST_SUITE("graph") {

TEST_CASE("worked example parses with correct counts") {
    std::istringstream in("0\t1\t1.0\n0\t2\t-1.0\n1\t2\t2.0\n2\t1\t1.0\n");
    const SignedGraph g = parse_edge_list(in);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(g.positive_count() == 3);
    CHECK(g.negative_count() == 1);
    CHECK(g.out_degree(0) == 2);
    CHECK(g.out_degree(1) == 1);
    CHECK(g.out_degree(2) == 1);
    CHECK_FALSE(g.is_sink(0));
}

TEST_CASE("positive plus negative always equals total") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto edges = refmodel::random_edges(rng, 12, 0.3, 0.5);
        if (edges.empty()) continue;
        const SignedGraph g = SignedGraph::from_edges(12, edges);
        CHECK(g.positive_count() + g.negative_count() == g.edge_count());
        CHECK(g.edge_count() == static_cast<std::int64_t>(edges.size()));
    }
}

TEST_CASE("edges come back sorted by source then destination") {
    const std::vector<Edge> scrambled = {{2, 1, 1.0}, {0, 2, -1.0}, {1, 2, 2.0}, {0, 1, 1.0}};
    const SignedGraph g = SignedGraph::from_edges(3, scrambled);
    const auto back = g.edges();
    REQUIRE(back.size() == 4);
    for (size_t i = 1; i < back.size(); ++i) {
        const bool ordered = back[i - 1].src < back[i].src ||
                             (back[i - 1].src == back[i].src && back[i - 1].dst < back[i].dst);
        CHECK(ordered);
    }
}

TEST_CASE("duplicate edges are rejected") {
    const std::vector<Edge> dup = {{0, 1, 1.0}, {0, 1, 2.0}};
    CHECK_THROWS_WITH_AS(SignedGraph::from_edges(2, dup),
                         doctest::Contains("duplicate edge (0, 1)"), InputError);
}

TEST_CASE("zero and non-finite weights are rejected") {
    CHECK_THROWS_AS(SignedGraph::from_edges(2, {{0, 1, 0.0}}), InputError);
    std::istringstream in("0\t1\tinf\n");
    CHECK_THROWS_AS(parse_edge_list(in), InputError);
    std::istringstream in2("0\t1\tnan\n");
    CHECK_THROWS_AS(parse_edge_list(in2), InputError);
}

TEST_CASE("out of range ids are rejected") {
    CHECK_THROWS_AS(SignedGraph::from_edges(2, {{0, 2, 1.0}}), InputError);
    CHECK_THROWS_AS(SignedGraph::from_edges(2, {{-1, 0, 1.0}}), InputError);
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream in("0\t1\t1.0\n\n# comment\n0\t2\t1.0\n1\t2\t2.0\n2\t1\t1.0\n1\tnot_a_number\t1.0\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(in), doctest::Contains("line 7"), InputError);

    std::istringstream trailing("0\t1\t1.0\tjunk\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(trailing), doctest::Contains("line 1"), InputError);
}

TEST_CASE("blank lines, comments, and CRLF endings are tolerated") {
    std::istringstream in("# header\r\n\r\n0\t1\t0.5\r\n1 0 -0.25\r\n");
    const SignedGraph g = parse_edge_list(in);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.positive_count() == 1);
}

TEST_CASE("empty edge lists are rejected on parse but fine in memory") {
    std::istringstream in("# nothing here\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(in), doctest::Contains("empty edge list"), InputError);
    // An edgeless graph is all sinks, so propagation is the identity.
    const SignedGraph g = SignedGraph::from_edges(3, {});
    CHECK(g.edge_count() == 0);
    const TransitionMatrix tm = TransitionMatrix::build(g);
    CHECK(tm.sink_nodes() == std::vector<int>{0, 1, 2});
    Vector c0(3);
    c0 << 0.5, -0.5, 1.0;
    CHECK(propagate_forward(tm, c0, 4) == c0);
}

TEST_CASE("edge list round-trips bit-exactly") {
    Rng rng(99);
    const auto edges = refmodel::random_edges(rng, 15, 0.25, 0.4);
    REQUIRE_FALSE(edges.empty());
    const SignedGraph g = SignedGraph::from_edges(15, edges);

    std::ostringstream first;
    serialize_edge_list(g, first);
    std::istringstream back(first.str());
    const SignedGraph g2 = parse_edge_list(back);

    const auto e1 = g.edges();
    const auto e2 = g2.edges();
    REQUIRE(e1.size() == e2.size());
    for (size_t i = 0; i < e1.size(); ++i) {
        CHECK(e1[i].src == e2[i].src);
        CHECK(e1[i].dst == e2[i].dst);
        CHECK(e1[i].weight == e2[i].weight);  // exact: %.17g survives the trip
    }

    std::ostringstream second;
    serialize_edge_list(g2, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("partition parsing assigns labels and validates") {
    std::istringstream in("0\t1\n2\t2\n");
    const PartitionVector p = parse_partitions(in, 3);
    CHECK(p.size() == 3);
    CHECK(p.label(0) == 1);
    CHECK(p.label(1) == 0);
    CHECK(p.label(2) == -1);
    CHECK(p.v1_count() == 1);
    CHECK(p.v2_count() == 1);
    CHECK(p.target_count() == 2);

    const Vector v = p.to_vector();
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 0.0);
    CHECK(v[2] == -1.0);
}

TEST_CASE("partition groups must be disjoint and in range") {
    std::istringstream dup("0\t1\n0\t2\n");
    CHECK_THROWS_WITH_AS(parse_partitions(dup, 3), doctest::Contains("listed twice"), InputError);

    std::istringstream badgroup("0\t3\n");
    CHECK_THROWS_WITH_AS(parse_partitions(badgroup, 3), doctest::Contains("group"), InputError);

    std::istringstream range("5\t1\n");
    CHECK_THROWS_AS(parse_partitions(range, 3), InputError);

    CHECK_THROWS_AS(PartitionVector({1, 0, 3}), InputError);
}

TEST_CASE("empty partition file means no targets") {
    std::istringstream in("");
    const PartitionVector p = parse_partitions(in, 4);
    CHECK(p.size() == 4);
    CHECK(p.target_count() == 0);
}

TEST_CASE("partitions round-trip") {
    const PartitionVector p({1, 0, -1, -1, 1});
    std::ostringstream out;
    serialize_partitions(p, out);
    std::istringstream back(out.str());
    const PartitionVector p2 = parse_partitions(back, 5);
    CHECK(p.labels() == p2.labels());
}

TEST_CASE("stats report counts degrees and sinks") {
    // 0 -> {1,2}, 1 -> 2; node 2 is a sink.
    const SignedGraph g = SignedGraph::from_edges(3, {{0, 1, 1.0}, {0, 2, -2.0}, {1, 2, 1.0}});
    const StatsReport s = graph_stats(g);
    CHECK(s.n == 3);
    CHECK(s.edges == 3);
    CHECK(s.positive == 2);
    CHECK(s.negative == 1);
    CHECK(s.sinks == 1);
    CHECK(s.out_degree_histogram.at(0) == 1);
    CHECK(s.out_degree_histogram.at(1) == 1);
    CHECK(s.out_degree_histogram.at(2) == 1);

    const PartitionVector p({1, -1, -1});
    const auto doc = nlohmann::json::parse(stats_to_json(s, &p));
    CHECK(doc["n"] == 3);
    CHECK(doc["edges"] == 3);
    CHECK(doc["positive"] == 2);
    CHECK(doc["negative"] == 1);
    CHECK(doc["sinks"] == 1);
    CHECK(doc["v1"] == 1);
    CHECK(doc["v2"] == 2);

    const auto plain = nlohmann::json::parse(stats_to_json(s));
    CHECK_FALSE(plain.contains("v1"));
}

TEST_CASE("remap_ids interns ids in first-appearance order") {
    const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
        {100, 7}, {7, 100}, {100, 55}};
    const std::vector<double> weights = {1.0, -2.0, 3.0};
    const auto [edges, originals] = remap_ids(pairs, weights);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0].src == 0);  // 100
    CHECK(edges[0].dst == 1);  // 7
    CHECK(edges[1].src == 1);
    CHECK(edges[1].dst == 0);
    CHECK(edges[2].dst == 2);  // 55
    CHECK(originals == std::vector<std::int64_t>{100, 7, 55});
    CHECK(edges[1].weight == -2.0);
}

}  // TEST_SUITE

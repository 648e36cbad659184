#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "kct/dist.hpp"
#include "kct/graph.hpp"
#include "oracles.hpp"

using namespace kct;

TEST_CASE("build rejects bad edges") {
    auto vs = fixtures::label_vertices(3);
    CHECK_THROWS_AS(RoadGraph::build(vs, std::vector<Edge>{{0, 0, 10}}), InputError);
    CHECK_THROWS_AS(RoadGraph::build(vs, std::vector<Edge>{{0, 1, 0}}), InputError);
    CHECK_THROWS_AS(RoadGraph::build(vs, std::vector<Edge>{{0, 1, -5}}), InputError);
    CHECK_THROWS_AS(RoadGraph::build(vs, std::vector<Edge>{{0, 3, 10}}), InputError);
    CHECK_THROWS_AS(RoadGraph::build(vs, std::vector<Edge>{{-1, 1, 10}}), InputError);
}

TEST_CASE("parallel edges collapse to the minimum weight") {
    RoadGraph g = fixtures::from_edges(2, {{0, 1, 50}, {1, 0, 30}, {0, 1, 70}});
    CHECK(g.edge_count() == 1);
    REQUIRE(g.neighbors(0).size() == 1);
    CHECK(g.neighbors(0)[0].to == 1);
    CHECK(g.neighbors(0)[0].weight == 30);
}

TEST_CASE("adjacency lists are sorted by neighbor id") {
    RoadGraph g = fixtures::from_edges(4, {{2, 0, 10}, {2, 3, 10}, {2, 1, 10}});
    std::vector<VertexId> nb;
    for (const Neighbor& x : g.neighbors(2)) nb.push_back(x.to);
    CHECK(nb == std::vector<VertexId>{0, 1, 3});
}

TEST_CASE("edges() lists unique normalized edges") {
    RoadGraph g = fixtures::k3();
    auto es = g.edges();
    REQUIRE(es.size() == 3);
    CHECK(es[0].u == 0);
    CHECK(es[0].v == 1);
    CHECK(es[0].weight == 10);
    CHECK(es[2].u == 1);
    CHECK(es[2].v == 2);
}

TEST_CASE("connectivity probes") {
    RoadGraph g = fixtures::from_edges(4, {{0, 1, 10}, {2, 3, 10}});
    CHECK_FALSE(is_connected(g));
    auto lost = find_unreachable(g, 0);
    REQUIRE(lost.has_value());
    CHECK(*lost == 2);
    CHECK(reachable_from(g, 0) == std::vector<VertexId>{0, 1});
    CHECK(reachable_from(g, 3) == std::vector<VertexId>{2, 3});

    CHECK(is_connected(fixtures::p5()));
    CHECK_FALSE(find_unreachable(fixtures::p5(), 0).has_value());
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
    RoadGraph g = fixtures::grid3();
    InducedSubgraph sub = induced_subgraph(g, std::vector<VertexId>{0, 1, 3, 4});
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 4);  // the top-left unit square
    CHECK(sub.to_parent == std::vector<VertexId>{0, 1, 3, 4});
    // labels travel along
    CHECK(sub.graph.vertex(2).label == "v3");

    CHECK_THROWS_AS(induced_subgraph(g, std::vector<VertexId>{}), InputError);
    CHECK_THROWS_AS(induced_subgraph(g, std::vector<VertexId>{0, 99}), InputError);
}

TEST_CASE("n-hop neighborhood counts edges, not weight") {
    RoadGraph p = fixtures::p3w();  // weights 1 and 5 minutes
    CHECK(n_hop_neighborhood(p, 0, 1) == std::vector<VertexId>{0, 1});
    CHECK(n_hop_neighborhood(p, 0, 2) == std::vector<VertexId>{0, 1, 2});

    RoadGraph g = fixtures::grid3();
    CHECK(n_hop_neighborhood(g, 4, 0) == std::vector<VertexId>{4});
    CHECK(n_hop_neighborhood(g, 4, 1) == std::vector<VertexId>{1, 3, 4, 5, 7});
    CHECK(n_hop_neighborhood(g, 0, 2) == std::vector<VertexId>{0, 1, 2, 3, 4, 6});
    CHECK(n_hop_neighborhood(g, 0, 4).size() == 9);
}

TEST_CASE("triangle distance matrix takes the two-edge shortcut") {
    RoadGraph g = fixtures::k3();  // direct a-c costs 3, via b costs 1+2
    DistanceMatrix dm = all_pairs(g);
    CHECK(dm.at(0, 1) == 10);
    CHECK(dm.at(1, 2) == 20);
    CHECK(dm.at(0, 2) == 30);
    CHECK(dm.at(2, 0) == 30);
    for (VertexId v = 0; v < 3; ++v) CHECK(dm.at(v, v) == 0);
}

TEST_CASE("all_pairs matches path enumeration on small random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        RoadGraph g = fixtures::random_connected(rng, n, static_cast<int>(rng() % 5));
        DistanceMatrix dm = all_pairs(g);
        oracle::Matrix ref = oracle::all_pairs(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(dm.at(i, j) == ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("all_pairs matches relaxation on mid-sized random graphs") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 20 + static_cast<int>(rng() % 40);
        RoadGraph g = fixtures::random_connected(rng, n, n);
        DistanceMatrix dm = all_pairs(g);
        oracle::Matrix ref = oracle::all_pairs_relax(g);
        bool same = true;
        for (int i = 0; i < n && same; ++i)
            for (int j = 0; j < n && same; ++j)
                same = dm.at(i, j) == ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        CHECK(same);
    }
}

TEST_CASE("parallel and serial all_pairs agree") {
    std::mt19937_64 rng(9);
    RoadGraph g = fixtures::random_connected(rng, 80, 120);
    CHECK(all_pairs(g) == all_pairs_serial(g));
}

TEST_CASE("all_pairs refuses disconnected graphs") {
    RoadGraph g = fixtures::from_edges(4, {{0, 1, 10}, {2, 3, 10}});
    CHECK_THROWS_AS(all_pairs(g), MetricError);
    CHECK_THROWS_AS(all_pairs_serial(g), MetricError);
}

TEST_CASE("unit path metric summary") {
    RoadGraph g = fixtures::p5();
    DistanceMatrix dm = all_pairs(g);
    MetricSummary ms = metric_summary(dm);
    CHECK(ms.radius == 20);
    CHECK(ms.diameter == 40);
    CHECK(ms.center == std::vector<VertexId>{2});
    CHECK(ms.periphery == std::vector<VertexId>{0, 4});
    CHECK(ms.median == std::vector<VertexId>{2});

    CHECK(eccentricity(dm, 0) == 40);
    CHECK(eccentricity(dm, 2) == 20);
}

TEST_CASE("diameter never exceeds twice the radius") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 30);
        RoadGraph g = fixtures::random_connected(rng, n, static_cast<int>(rng() % (2 * n)));
        MetricSummary ms = metric_summary(all_pairs(g));
        CHECK(ms.diameter <= 2 * ms.radius);
        CHECK(ms.radius <= ms.diameter);
    }
}

TEST_CASE("weighted path stats") {
    RoadGraph g = fixtures::p3w();  // edges 1 and 5 minutes, paths 1, 5, 6
    StatsReport st = graph_stats(g, all_pairs(g));
    CHECK(st.edge_weight_min == 10);
    CHECK(st.edge_weight_max == 50);
    CHECK(st.edge_weight_mean_minutes == doctest::Approx(3.0));
    CHECK(st.edge_weight_stddev_minutes == doctest::Approx(2.0));
    CHECK(st.path_weight_mean_minutes == doctest::Approx(4.0));
    CHECK(st.path_weight_mode_minutes == 1);
    CHECK(st.degree_histogram == std::vector<long long>{0, 2, 1});
}

TEST_CASE("unit path degree histogram and mode rounding") {
    RoadGraph g = fixtures::p5();
    StatsReport st = graph_stats(g, all_pairs(g));
    CHECK(st.degree_histogram == std::vector<long long>{0, 2, 3});
    // path weights in minutes: 1x4, 2x3, 3x2, 4x1; mode is the most common
    CHECK(st.path_weight_mode_minutes == 1);

    // 0.5 minutes rounds half-up to 1
    RoadGraph h = fixtures::from_edges(2, {{0, 1, 5}});
    StatsReport sh = graph_stats(h, all_pairs(h));
    CHECK(sh.path_weight_mode_minutes == 1);
}

TEST_CASE("graph stats on a single vertex") {
    RoadGraph g = fixtures::from_edges(1, {});
    DistanceMatrix dm = all_pairs(g);
    MetricSummary ms = metric_summary(dm);
    CHECK(ms.radius == 0);
    CHECK(ms.diameter == 0);
    CHECK(ms.center == std::vector<VertexId>{0});
}

TEST_CASE("minutes parsing is exact at 0.1 resolution") {
    CHECK(parse_minutes_exact("7") == 70);
    CHECK(parse_minutes_exact("6.5") == 65);
    CHECK(parse_minutes_exact("10.50") == 105);
    CHECK(parse_minutes_exact("0.1") == 1);
    CHECK_THROWS_AS(parse_minutes_exact("6.55"), InputError);
    CHECK_THROWS_AS(parse_minutes_exact("-1"), InputError);
    CHECK_THROWS_AS(parse_minutes_exact("abc"), InputError);
    CHECK_THROWS_AS(parse_minutes_exact(""), InputError);
    CHECK_THROWS_AS(parse_minutes_exact("1e2"), InputError);

    CHECK(minutes_str(65) == "6.5");
    CHECK(minutes_str(70) == "7.0");
    CHECK(minutes_str(0) == "0.0");
    CHECK(tenths_from_minutes(6.55) == 66);  // half away from zero
    CHECK(tenths_from_minutes(2.0) == 20);
}

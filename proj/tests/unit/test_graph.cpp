#include <numeric>
#include <random>

#include "doctest.h"
#include "findex/checked.hpp"
#include "findex/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace findex;

TEST_CASE("forgotten index of small named graphs") {
    CHECK(forgotten_index(fixtures::cycle(4)) == 32);
    CHECK(forgotten_index(fixtures::complete(4)) == 108);
    CHECK(forgotten_index(fixtures::bowtie()) == 96);
    CHECK(forgotten_index(Graph(0)) == 0);
    CHECK(forgotten_index(Graph(3)) == 0);
}

TEST_CASE("both forms of F agree with a direct cube sum") {
    const Graph g = fixtures::bowtie();
    const auto deg = g.degrees();
    CHECK(forgotten_index_vertex_form(deg) == 96);
    CHECK(forgotten_index_edge_form(g.edges(), deg) == 96);
}

TEST_CASE("construction rejects loops, repeated pairs and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and sorted") {
    const Graph g(4, {{3, 0}, {2, 0}, {1, 0}});
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    auto nb = g.neighbors(0);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 2, 3});
    CHECK(g == Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
}

TEST_CASE("bicyclic predicate") {
    CHECK(is_bicyclic(fixtures::bowtie()));
    CHECK_FALSE(is_bicyclic(fixtures::cycle(5)));
    CHECK(is_bicyclic(fixtures::theta4()));

    // Triangle plus a disjoint K4 minus two edges: m = n + 1 but disconnected.
    const Graph split(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {3, 5}});
    CHECK_FALSE(is_bicyclic(split));
    CHECK(is_bicyclic(split, /*require_connected=*/false));
}

TEST_CASE("maximum degree, connectivity and cycle rank") {
    const Graph bowtie = fixtures::bowtie();
    CHECK(max_degree(bowtie) == 4);
    CHECK(is_connected(bowtie));
    CHECK(cycle_rank(bowtie) == 2);

    const Graph empty(3);
    CHECK(max_degree(empty) == 0);
    CHECK_FALSE(is_connected(empty));
    CHECK(cycle_rank(empty) == 0);

    const Graph p3 = fixtures::path(3);
    CHECK(max_degree(p3) == 2);
    CHECK(is_connected(p3));
    CHECK(cycle_rank(p3) == 0);
}

TEST_CASE("overflow is reported, not wrapped") {
    const std::vector<int> huge{2'100'000, 2'100'000};
    CHECK_THROWS_AS(forgotten_index_vertex_form(huge), OverflowError);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
}

TEST_CASE("random graphs: handshake, dual form and relabelling invariance") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> order(0, 30);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = oracle::random_graph(rng, order(rng), density(rng));
        const auto deg = g.degrees();
        CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * g.size());
        const std::int64_t f = forgotten_index_vertex_form(deg);
        REQUIRE(forgotten_index_edge_form(g.edges(), deg) == f);
        CHECK(f == oracle::cube_sum(deg));

        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(forgotten_index(relabel(g, perm)) == f);
    }
}

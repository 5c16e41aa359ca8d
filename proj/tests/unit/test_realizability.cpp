#include <set>

#include "doctest.h"
#include "findex/realizability.hpp"
#include "oracles.hpp"

using namespace findex;

namespace {

std::set<std::vector<int>> realized_sequences(int n, int edges) {
    std::set<std::vector<int>> seen;
    oracle::for_each_edge_subset(n, edges, [&](const std::vector<Edge>& list) {
        auto d = oracle::degrees_of(n, list);
        std::sort(d.rbegin(), d.rend());
        seen.insert(d);
    });
    return seen;
}

// Non-increasing sequences of length n with entries in [0, top] summing to total.
void for_each_sequence(int n, int top, int total, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> seq;
    std::function<void(int, int)> grow = [&](int bound, int left) {
        if (static_cast<int>(seq.size()) == n) {
            if (left == 0) {
                fn(seq);
            }
            return;
        }
        for (int d = std::min(bound, left); d >= 0; --d) {
            seq.push_back(d);
            grow(d, left - d);
            seq.pop_back();
        }
    };
    grow(top, total);
}

}  // namespace

TEST_CASE("Erdos-Gallai examples") {
    CHECK(erdos_gallai(std::vector<int>{2, 2, 2}));
    CHECK(erdos_gallai(std::vector<int>{4, 4, 3, 2, 1, 1, 1}));
    CHECK_FALSE(erdos_gallai(std::vector<int>{5, 5, 4, 1, 1, 1, 1, 1, 1}));
    CHECK_FALSE(erdos_gallai(std::vector<int>{4, 4, 4, 1, 1, 1, 1}));
    CHECK_FALSE(erdos_gallai(std::vector<int>{1, 1, 1}));  // odd sum
    CHECK(erdos_gallai(std::vector<int>{}));
    CHECK(erdos_gallai(std::vector<int>{1, 2, 1}));  // order does not matter
    CHECK_THROWS_AS(erdos_gallai(std::vector<int>{2, -1, 1}), std::invalid_argument);
}

TEST_CASE("Erdos-Gallai agrees with exhaustive search for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto truth = realized_sequences(n, n + 1);
        int checked = 0;
        for_each_sequence(n, n, 2 * n + 2, [&](const std::vector<int>& seq) {
            CAPTURE(n);
            CHECK(erdos_gallai(seq) == (truth.count(seq) > 0));
            ++checked;
        });
        if (n >= 4) {
            CHECK(checked > 0);
        }
    }
}

TEST_CASE("bicyclic realizability") {
    CHECK(bicyclic_realizable(DegreeHistogram(4, {5, 0, 1, 3})));
    CHECK_FALSE(bicyclic_realizable(DegreeHistogram(5, {6, 0, 0, 1, 2})));
    CHECK_FALSE(bicyclic_realizable(DegreeHistogram(4, {4, 0, 0, 3})));
    CHECK_FALSE(bicyclic_realizable(DegreeHistogram(2, {0, 5})));
    CHECK(bicyclic_realizable(DegreeHistogram(4, {0, 4, 0, 1})));
}

TEST_CASE("realize builds a connected bicyclic graph with the exact histogram") {
    const Graph g = realize(DegreeHistogram(4, {5, 0, 1, 3}));
    CHECK(g.order() == 9);
    CHECK(g.size() == 10);
    CHECK(is_bicyclic(g));
    CHECK(forgotten_index(g) == 224);
    auto deg = g.degrees();
    std::sort(deg.rbegin(), deg.rend());
    CHECK(deg == std::vector<int>{4, 4, 4, 3, 1, 1, 1, 1, 1});

    const Graph b = realize(DegreeHistogram(4, {0, 4, 0, 1}));
    CHECK(is_bicyclic(b));
    CHECK(histogram_from_graph(b) == DegreeHistogram(4, {0, 4, 0, 1}));

    CHECK_THROWS_AS(realize(DegreeHistogram(2, {0, 6})), std::invalid_argument);
    CHECK_THROWS_AS(realize(DegreeHistogram(5, {6, 0, 0, 1, 2})), std::invalid_argument);
}

TEST_CASE("realize round-trips every realizable bicyclic histogram up to n = 12") {
    int realized = 0;
    for (int delta = 3; delta <= 6; ++delta) {
        for (int n = delta + 1; n <= 12; ++n) {
            oracle::for_each_bicyclic_histogram(n, delta, [&](const std::vector<std::int64_t>& c) {
                const DegreeHistogram h(delta, c);
                if (!bicyclic_realizable(h)) {
                    CHECK_THROWS(realize(h));
                    return;
                }
                const Graph g = realize(h);
                CHECK(is_bicyclic(g));
                CHECK(histogram_from_graph(g) == h);
                CHECK(realize(h) == g);
                ++realized;
            });
        }
    }
    CHECK(realized > 100);
}

TEST_CASE("Havel-Hakimi realises graphical sequences, possibly disconnected") {
    const Graph g = havel_hakimi(std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(g.size() == 6);
    CHECK(g.degrees() == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK_THROWS_AS(havel_hakimi(std::vector<int>{3, 3, 1, 1}), std::invalid_argument);
}

#pragma once

#include <cstdint>

#include "findex/graph.hpp"

namespace findex {

/// Largest order whose upper triangle fits in a 64-bit edge mask.
inline constexpr int kMaskMaxOrder = 11;

/// Position of pair (u, v), u < v, in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr int edge_index(int n, int u, int v) {
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

/// Canonical labelled representative of an isomorphism class, as an edge
/// mask. Vertices are split into colour classes by iterated neighbourhood
/// refinement starting from degree, classes are laid out in increasing
/// colour, and the form is the minimum mask over every permutation inside
/// the classes. Exact for any graph; cost grows with the product of class
/// factorials, which is fine for n <= 11.
std::uint64_t canonical_mask(int n, std::uint64_t mask);

inline std::uint64_t canonical_mask(const Graph& g) {
    return canonical_mask(g.order(), edge_mask(g));
}

/// True iff the labelled graph is its own canonical representative.
bool is_canonical(int n, std::uint64_t mask);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace findex

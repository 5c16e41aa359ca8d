#pragma once

#include <span>

#include "findex/graph.hpp"
#include "findex/histogram.hpp"

namespace findex {

/// Erdos-Gallai test. The sequence is sorted internally, so any order is
/// accepted; negative entries throw std::invalid_argument.
bool erdos_gallai(std::span<const int> degrees);

/// True iff h is graphical and satisfies sum i*n_i = 2n + 2. Such a sequence
/// (all degrees >= 1, m = n + 1 >= n - 1) always has a connected realization.
bool bicyclic_realizable(const DegreeHistogram& h);

/// Connected simple graph with degree histogram exactly h and m = n + 1.
/// Vertex 0 carries the largest degree. Havel-Hakimi gives a simple
/// realization; degree-preserving 2-switches then merge components one at a
/// time. Deterministic in h. Throws std::invalid_argument unless
/// bicyclic_realizable(h).
Graph realize(const DegreeHistogram& h);

/// Havel-Hakimi realization of an arbitrary graphical sequence (possibly
/// disconnected); vertex v receives degrees[v] after sorting non-increasing.
Graph havel_hakimi(std::span<const int> degrees);

}  // namespace findex

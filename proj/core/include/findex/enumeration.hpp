#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "findex/graph.hpp"

namespace findex {

/// Default largest n accepted by enumerate_bicyclic.
inline constexpr int kDefaultEnumerationCap = 9;

struct EnumSpec {
    int n = 4;
    /// Keep only graphs whose maximum degree is exactly this value.
    std::optional<int> delta_exact;
    /// Prune any graph with a vertex above this degree.
    std::optional<int> delta_at_most;
    /// Emit one labelled representative per isomorphism class.
    bool dedup = false;
    /// false drops the connectivity requirement (all graphs with m = n + 1).
    bool connected = true;
    int jobs = 1;
    /// n above this is rejected; may be raised up to kMaskMaxOrder.
    int max_order = kDefaultEnumerationCap;
};

/// One visited graph. Spans are only valid during the visitor call.
struct EnumeratedGraph {
    int n = 0;
    std::uint64_t mask = 0;
    std::span<const Edge> edges;
    std::span<const int> degrees;
    int max_degree = 0;
    std::int64_t forgotten_index = 0;

    Graph to_graph() const { return Graph(n, edges); }
};

struct DegreeClassStats {
    std::uint64_t count = 0;
    std::int64_t max_f = -1;
    std::uint64_t argmax_count = 0;
    /// First maximiser in enumeration order.
    std::optional<std::uint64_t> witness;

    friend bool operator==(const DegreeClassStats&, const DegreeClassStats&) = default;
};

struct EnumSummary {
    int n = 0;
    std::uint64_t count = 0;
    std::int64_t max_f = -1;
    std::uint64_t argmax_count = 0;
    std::optional<std::uint64_t> witness;
    /// Indexed by maximum degree, 0..n-1.
    std::vector<DegreeClassStats> by_max_degree;
    /// Canonical graph6 strings of every maximiser, sorted; filled only with dedup.
    std::vector<std::string> canonical_argmax;

    std::optional<Graph> witness_graph() const;
    std::optional<Graph> witness_graph(int max_degree) const;

    friend bool operator==(const EnumSummary&, const EnumSummary&) = default;
};

/// Called for every emitted graph. Invocations come from `jobs` threads
/// concurrently; `worker` in [0, jobs) identifies the calling thread so the
/// visitor can buffer locally.
using EnumVisitor = std::function<void(const EnumeratedGraph&, int worker)>;

/// Visits every simple graph on n vertices with n + 1 edges that passes the
/// spec's filters (connected by default). Edge subsets are walked depth first
/// in lexicographic order of their sorted edge indices with pruning on the
/// degree cap, on finished vertices left isolated or sealed off in a closed
/// component, and on (components - 1) exceeding the remaining edge budget.
/// Work is split over the first two chosen edges; the summary does not
/// depend on `jobs`. Throws std::invalid_argument for n outside [4, max_order]
/// or a delta filter outside [3, n-1].
EnumSummary enumerate_bicyclic(const EnumSpec& spec, const EnumVisitor& visitor = {});

/// Order in which enumerate_bicyclic visits edge masks of equal popcount.
bool enumeration_order_less(std::uint64_t a, std::uint64_t b);

}  // namespace findex

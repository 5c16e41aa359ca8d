#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "findex/graph.hpp"

namespace findex {

/// Vertex counts (n_1, ..., n_delta) per degree, with delta stored explicitly
/// and required to be attained (n_delta >= 1).
class DegreeHistogram {
public:
    DegreeHistogram(int delta, std::vector<std::int64_t> counts);

    int delta() const { return delta_; }
    /// n_i for 1 <= i <= delta; zero outside that range.
    std::int64_t count(int degree) const;
    const std::vector<std::int64_t>& counts() const { return counts_; }

    std::int64_t order() const;
    std::int64_t degree_sum() const;
    /// sum over i >= 2 of (i - 1) * n_i.
    std::int64_t excess_weight() const;

    /// Degree multiset, non-increasing.
    std::vector<int> degree_sequence() const;

    /// "n_1,n_2,...,n_delta"
    std::string to_string() const;

    friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

private:
    int delta_;
    std::vector<std::int64_t> counts_;
};

/// Parses "n_1,n_2,...,n_delta"; delta is the list length.
DegreeHistogram parse_histogram(const std::string& text);

/// Requires at least one edge and no isolated vertices.
DegreeHistogram histogram_from_graph(const Graph& g);

struct IdentityCheck {
    bool holds = false;
    std::int64_t order = 0;
    std::int64_t degree_sum = 0;
    std::int64_t excess_weight = 0;
    /// Empty when holds; otherwise names the failing identity.
    std::string diagnostic;

    explicit operator bool() const { return holds; }
};

/// Counting identities for m = n + 1:
///   sum i * n_i = 2n + 2   and   sum (i - 1) * n_i = n + 2.
IdentityCheck check_bicyclic_identities(const DegreeHistogram& h);

/// sum i^3 * n_i, checked.
std::int64_t f_from_histogram(const DegreeHistogram& h);

/// n_{i+1} copies of i for i = delta-1 down to 1.
struct DeltaPartition {
    std::vector<int> parts;

    std::int64_t total() const;
};

DeltaPartition delta_partition(const DegreeHistogram& h);

}  // namespace findex

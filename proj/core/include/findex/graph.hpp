#pragma once

#include <cstdint>
#include <stdexcept>
#include <span>
#include <utility>
#include <vector>

namespace findex {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates the edge set: self-loops, repeated pairs and
/// out-of-range endpoints are rejected with std::invalid_argument. After
/// construction the edge list is sorted and every adjacency list is sorted,
/// so two graphs built from the same edge set in any order compare equal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    std::vector<int> degrees() const;
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// F(G) as the sum of cubed degrees. Checked 64-bit arithmetic.
std::int64_t forgotten_index_vertex_form(std::span<const int> degrees);

/// F(G) as the sum over edges of d(u)^2 + d(v)^2.
std::int64_t forgotten_index_edge_form(std::span<const Edge> edges, std::span<const int> degrees);

/// Forgotten index of g. Computes the vertex form; when FINDEX_VERIFY is on
/// (the default outside NDEBUG builds) the edge form is computed too and a
/// mismatch throws std::logic_error.
std::int64_t forgotten_index(const Graph& g);

int max_degree(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// m - n + (number of components).
int cycle_rank(const Graph& g);

/// m == n + 1, and connected unless require_connected is false.
bool is_bicyclic(const Graph& g, bool require_connected = true);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace findex

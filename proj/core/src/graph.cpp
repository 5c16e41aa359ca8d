#include "findex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "findex/checked.hpp"

#if !defined(FINDEX_VERIFY) && !defined(NDEBUG)
#define FINDEX_VERIFY 1
#endif

namespace findex {

namespace {

std::string edge_text(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n) : n_(n), adjacency_(n < 0 ? 0 : n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge " + edge_text(e.u, e.v) + " out of range for n=" +
                                        std::to_string(n));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge " + edge_text(dup->u, dup->v));
    }
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
          std::vector<Edge> list;
          list.reserve(edges.size());
          for (auto [u, v] : edges) {
              list.push_back(Edge{u, v});
          }
          return list;
      }()) {}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        out[v] = static_cast<int>(adjacency_[v].size());
    }
    return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        return false;
    }
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::int64_t forgotten_index_vertex_form(std::span<const int> degrees) {
    std::int64_t total = 0;
    for (int d : degrees) {
        total = checked_add(total, checked_cube(d));
    }
    return total;
}

std::int64_t forgotten_index_edge_form(std::span<const Edge> edges, std::span<const int> degrees) {
    std::int64_t total = 0;
    for (const Edge& e : edges) {
        const std::int64_t du = degrees[e.u];
        const std::int64_t dv = degrees[e.v];
        total = checked_add(total, checked_add(checked_mul(du, du), checked_mul(dv, dv)));
    }
    return total;
}

std::int64_t forgotten_index(const Graph& g) {
    const std::vector<int> deg = g.degrees();
    const std::int64_t value = forgotten_index_vertex_form(deg);
#if FINDEX_VERIFY
    if (forgotten_index_edge_form(g.edges(), deg) != value) {
        throw std::logic_error("edge and vertex forms of the forgotten index disagree");
    }
#endif
    return value;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        best = std::max(best, g.degree(v));
    }
    return best;
}

int component_count(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack;
    int components = 0;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root]) {
            continue;
        }
        ++components;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) {
    // The empty graph and K1 are connected; an edgeless graph on n >= 2 is not.
    return component_count(g) <= 1;
}

int cycle_rank(const Graph& g) {
    return g.size() - g.order() + component_count(g);
}

bool is_bicyclic(const Graph& g, bool require_connected) {
    if (g.size() != g.order() + 1) {
        return false;
    }
    return !require_connected || is_connected(g);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) {
        throw std::invalid_argument("permutation size does not match vertex count");
    }
    std::vector<Edge> mapped;
    mapped.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        mapped.push_back(Edge{perm[e.u], perm[e.v]});
    }
    return Graph(g.order(), mapped);
}

}  // namespace findex

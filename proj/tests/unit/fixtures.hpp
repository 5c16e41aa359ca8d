#pragma once

#include "findex/graph.hpp"

namespace findex::fixtures {

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.push_back(Edge{v, (v + 1) % n});
    }
    return Graph(n, edges);
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back(Edge{u, v});
        }
    }
    return Graph(n, edges);
}

// Two triangles sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// K4 minus the edge {2,3}.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// a=0, b=1, c=2, d=3: edges ab, ac, cb, ad, db.
inline Graph theta4() { return Graph(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}}); }

inline Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) {
        edges.push_back(Edge{v, v + 1});
    }
    return Graph(n, edges);
}

}  // namespace findex::fixtures

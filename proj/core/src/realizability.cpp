#include "findex/realizability.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace findex {

bool erdos_gallai(std::span<const int> degrees) {
    std::vector<long long> d(degrees.begin(), degrees.end());
    for (long long x : d) {
        if (x < 0) {
            throw std::invalid_argument("degree sequence entries must be non-negative");
        }
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    const long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total % 2 != 0) {
        return false;
    }
    const long long n = static_cast<long long>(d.size());
    long long prefix = 0;
    for (long long q = 1; q <= n; ++q) {
        prefix += d[q - 1];
        long long tail = 0;
        for (long long i = q; i < n; ++i) {
            tail += std::min(d[i], q);
        }
        if (prefix > q * (q - 1) + tail) {
            return false;
        }
    }
    return true;
}

bool bicyclic_realizable(const DegreeHistogram& h) {
    if (!check_bicyclic_identities(h)) {
        return false;
    }
    const std::vector<int> seq = h.degree_sequence();
    return erdos_gallai(seq);
}

Graph havel_hakimi(std::span<const int> degrees) {
    const int n = static_cast<int>(degrees.size());
    std::vector<int> remaining(degrees.begin(), degrees.end());
    std::sort(remaining.begin(), remaining.end(), std::greater<>());
    std::vector<Edge> edges;
    std::vector<int> order(n);
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return remaining[a] > remaining[b]; });
        const int hub = order[0];
        const int need = remaining[hub];
        if (need == 0) {
            break;
        }
        if (need > n - 1) {
            throw std::invalid_argument("degree sequence is not graphical");
        }
        remaining[hub] = 0;
        for (int i = 1; i <= need; ++i) {
            const int w = order[i];
            if (remaining[w] == 0) {
                throw std::invalid_argument("degree sequence is not graphical");
            }
            --remaining[w];
            edges.push_back(Edge{std::min(hub, w), std::max(hub, w)});
        }
    }
    return Graph(n, edges);
}

namespace {

std::vector<int> component_labels(int n, const std::vector<Edge>& edges, int skip = -1) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (i == skip) {
            continue;
        }
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int root = 0; root < n; ++root) {
        if (label[root] >= 0) {
            continue;
        }
        std::vector<int> stack{root};
        label[root] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace

Graph realize(const DegreeHistogram& h) {
    if (!bicyclic_realizable(h)) {
        throw std::invalid_argument("histogram " + h.to_string() +
                                    " has no connected bicyclic realization");
    }
    const std::vector<int> seq = h.degree_sequence();
    const int n = static_cast<int>(seq.size());
    std::vector<Edge> edges = havel_hakimi(seq).edges();

    for (;;) {
        std::vector<int> label = component_labels(n, edges);
        const int components = *std::max_element(label.begin(), label.end()) + 1;
        if (components == 1) {
            break;
        }
        // First edge lying on a cycle: removing it leaves its endpoints connected.
        int cyclic = -1;
        for (int i = 0; i < static_cast<int>(edges.size()) && cyclic < 0; ++i) {
            std::vector<int> without = component_labels(n, edges, i);
            if (without[edges[i].u] == without[edges[i].v]) {
                cyclic = i;
            }
        }
        if (cyclic < 0) {
            throw std::logic_error("realize: no cycle edge in a disconnected graph with m = n + 1");
        }
        const int home = label[edges[cyclic].u];
        int other = -1;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (label[edges[i].u] != home) {
                other = i;
                break;
            }
        }
        if (other < 0) {
            throw std::logic_error("realize: component without edges");
        }
        const Edge ab = edges[cyclic];
        const Edge cd = edges[other];
        edges[cyclic] = Edge{std::min(ab.u, cd.u), std::max(ab.u, cd.u)};
        edges[other] = Edge{std::min(ab.v, cd.v), std::max(ab.v, cd.v)};
    }
    return Graph(n, edges);
}

}  // namespace findex

#include "findex/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace findex {

namespace {

struct Pair {
    int u;
    int v;
};

void require_order(int n) {
    if (n < 0 || n > kMaskMaxOrder) {
        throw std::invalid_argument("edge masks support 0 <= n <= 11");
    }
}

std::vector<Pair> pairs_of(int n, std::uint64_t mask) {
    std::vector<Pair> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((mask >> edge_index(n, u, v)) & 1U) {
                out.push_back(Pair{u, v});
            }
        }
    }
    return out;
}

// Stable colouring: colour[v] is an isomorphism-invariant rank.
std::vector<int> refine_colours(int n, const std::vector<Pair>& pairs) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : pairs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) {
        colour[v] = static_cast<int>(adj[v].size());
    }
    int classes = -1;
    for (;;) {
        std::vector<std::vector<int>> signature(n);
        for (int v = 0; v < n; ++v) {
            signature[v].push_back(colour[v]);
            std::vector<int> around;
            for (int w : adj[v]) {
                around.push_back(colour[w]);
            }
            std::sort(around.begin(), around.end());
            signature[v].insert(signature[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : signature) {
            rank.emplace(s, 0);
        }
        int next = 0;
        for (auto& [key, value] : rank) {
            value = next++;
        }
        for (int v = 0; v < n; ++v) {
            colour[v] = rank[signature[v]];
        }
        if (next == classes) {
            return colour;
        }
        classes = next;
    }
}

class CanonicalSearch {
public:
    CanonicalSearch(int n, std::uint64_t mask) : n_(n), pairs_(pairs_of(n, mask)) {
        const std::vector<int> colour = refine_colours(n, pairs_);
        int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
        blocks_.resize(classes);
        for (int v = 0; v < n; ++v) {
            blocks_[colour[v]].push_back(v);
        }
        sorted_ = std::is_sorted(colour.begin(), colour.end());
        position_.resize(n);
    }

    bool colours_sorted() const { return sorted_; }

    // Minimum over all block-respecting relabellings; stops early (returning
    // a value below `stop_below`) as soon as one is found.
    std::uint64_t minimum(std::uint64_t stop_below = 0) {
        best_ = ~std::uint64_t{0};
        stop_below_ = stop_below;
        stopped_ = false;
        walk(0, 0);
        return best_;
    }

private:
    void walk(std::size_t block, int offset) {
        if (stopped_) {
            return;
        }
        if (block == blocks_.size()) {
            std::uint64_t mask = 0;
            for (auto [u, v] : pairs_) {
                int a = position_[u];
                int b = position_[v];
                if (a > b) {
                    std::swap(a, b);
                }
                mask |= std::uint64_t{1} << edge_index(n_, a, b);
            }
            best_ = std::min(best_, mask);
            if (best_ < stop_below_) {
                stopped_ = true;
            }
            return;
        }
        std::vector<int>& members = blocks_[block];
        std::sort(members.begin(), members.end());
        do {
            for (std::size_t i = 0; i < members.size(); ++i) {
                position_[members[i]] = offset + static_cast<int>(i);
            }
            walk(block + 1, offset + static_cast<int>(members.size()));
        } while (!stopped_ && std::next_permutation(members.begin(), members.end()));
    }

    int n_;
    std::vector<Pair> pairs_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> position_;
    bool sorted_ = false;
    std::uint64_t best_ = 0;
    std::uint64_t stop_below_ = 0;
    bool stopped_ = false;
};

}  // namespace

std::uint64_t edge_mask(const Graph& g) {
    require_order(g.order());
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) {
        mask |= std::uint64_t{1} << edge_index(g.order(), e.u, e.v);
    }
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    require_order(n);
    std::vector<Edge> edges;
    for (auto [u, v] : pairs_of(n, mask)) {
        edges.push_back(Edge{u, v});
    }
    return Graph(n, edges);
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    require_order(n);
    return CanonicalSearch(n, mask).minimum();
}

bool is_canonical(int n, std::uint64_t mask) {
    require_order(n);
    CanonicalSearch search(n, mask);
    if (!search.colours_sorted()) {
        return false;
    }
    return search.minimum(mask) == mask;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    return canonical_mask(a) == canonical_mask(b);
}

}  // namespace findex

#include "findex/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "findex/canonical.hpp"
#include "findex/graph_io.hpp"

namespace findex {

namespace {

struct Task {
    int first;
    int second;
};

// Union-find with rollback: union by size, no path compression.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
        for (int v = 0; v < n; ++v) {
            parent_[v] = v;
        }
    }

    int find(int v) const {
        while (parent_[v] != v) {
            v = parent_[v];
        }
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            history_.push_back(-1);
            return;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        history_.push_back(b);
    }

    void undo() {
        const int b = history_.back();
        history_.pop_back();
        if (b < 0) {
            return;
        }
        const int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
        ++components_;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    int components_;
};

void record(DegreeClassStats& stats, std::uint64_t mask, std::int64_t f) {
    ++stats.count;
    if (f > stats.max_f) {
        stats.max_f = f;
        stats.argmax_count = 1;
        stats.witness = mask;
    } else if (f == stats.max_f) {
        ++stats.argmax_count;
        if (enumeration_order_less(mask, *stats.witness)) {
            stats.witness = mask;
        }
    }
}

void merge_into(DegreeClassStats& into, const DegreeClassStats& from) {
    into.count += from.count;
    if (from.max_f > into.max_f) {
        into.max_f = from.max_f;
        into.argmax_count = from.argmax_count;
        into.witness = from.witness;
    } else if (from.max_f == into.max_f && from.max_f >= 0) {
        into.argmax_count += from.argmax_count;
        if (enumeration_order_less(*from.witness, *into.witness)) {
            into.witness = from.witness;
        }
    }
}

class Walker {
public:
    Walker(const EnumSpec& spec, const EnumVisitor& visitor, int worker)
        : spec_(spec),
          visitor_(visitor),
          worker_(worker),
          n_(spec.n),
          target_(spec.n + 1),
          uf_(spec.n),
          degree_(spec.n, 0),
          stats_(spec.n) {
        for (int u = 0; u < n_; ++u) {
            row_start_.push_back(static_cast<int>(pair_u_.size()));
            for (int v = u + 1; v < n_; ++v) {
                pair_u_.push_back(u);
                pair_v_.push_back(v);
            }
        }
        edge_total_ = static_cast<int>(pair_u_.size());
        // row_of_boundary_[i] = u when index i starts row u (u >= 1), else -1.
        row_of_boundary_.assign(edge_total_ + 1, -1);
        for (int u = 1; u < n_; ++u) {
            row_of_boundary_[row_start_[u]] = u;
        }
        cap_ = n_ - 1;
        if (spec.delta_at_most) {
            cap_ = std::min(cap_, *spec.delta_at_most);
        }
        if (spec.delta_exact) {
            cap_ = std::min(cap_, *spec.delta_exact);
        }
    }

    int edge_total() const { return edge_total_; }

    void run(Task task) {
        task_ = task;
        descend(0, 0);
    }

    const std::vector<DegreeClassStats>& stats() const { return stats_; }
    const std::set<std::string>& canonical_argmax() const { return canonical_argmax_; }
    std::int64_t canonical_max() const { return canonical_max_; }

private:
    void descend(int idx, int chosen) {
        if (chosen == target_) {
            leaf();
            return;
        }
        if (edge_total_ - idx < target_ - chosen) {
            return;
        }
        if (spec_.connected) {
            if (uf_.components() - 1 > target_ - chosen) {
                return;
            }
            const int row = row_of_boundary_[idx];
            if (row > 0 && sealed(row - 1, row)) {
                return;
            }
        }
        const bool forced = idx <= task_.second;
        const bool force_take = idx == task_.first || idx == task_.second;
        const int u = pair_u_[idx];
        const int v = pair_v_[idx];
        if ((!forced || force_take) && degree_[u] < cap_ && degree_[v] < cap_) {
            take(idx, u, v);
            descend(idx + 1, chosen + 1);
            drop(idx, u, v);
        }
        if (!forced || !force_take) {
            descend(idx + 1, chosen);
        }
    }

    // Vertex `done` has all its edges decided. It must have an edge and its
    // component must still reach a vertex that can gain edges (index >= `open`).
    bool sealed(int done, int open) const {
        if (degree_[done] == 0) {
            return true;
        }
        const int root = uf_.find(done);
        for (int w = open; w < n_; ++w) {
            if (uf_.find(w) == root) {
                return false;
            }
        }
        return true;
    }

    void take(int idx, int u, int v) {
        f_ += 3 * (degree_[u] * degree_[u] + degree_[u]) + 1;
        f_ += 3 * (degree_[v] * degree_[v] + degree_[v]) + 1;
        ++degree_[u];
        ++degree_[v];
        uf_.unite(u, v);
        mask_ |= std::uint64_t{1} << idx;
        edges_.push_back(Edge{u, v});
    }

    void drop(int idx, int u, int v) {
        edges_.pop_back();
        mask_ &= ~(std::uint64_t{1} << idx);
        uf_.undo();
        --degree_[u];
        --degree_[v];
        f_ -= 3 * (degree_[u] * degree_[u] + degree_[u]) + 1;
        f_ -= 3 * (degree_[v] * degree_[v] + degree_[v]) + 1;
    }

    void leaf() {
        if (spec_.connected && uf_.components() != 1) {
            return;
        }
        const int top = *std::max_element(degree_.begin(), degree_.end());
        if (spec_.delta_exact && top != *spec_.delta_exact) {
            return;
        }
        if (spec_.dedup) {
            // Canonical labellings list vertices by non-decreasing degree.
            if (!std::is_sorted(degree_.begin(), degree_.end()) || !is_canonical(n_, mask_)) {
                return;
            }
        }
        record(stats_[top], mask_, f_);
        if (spec_.dedup && f_ >= canonical_max_) {
            if (f_ > canonical_max_) {
                canonical_max_ = f_;
                canonical_argmax_.clear();
            }
            canonical_argmax_.insert(to_graph6(graph_from_mask(n_, mask_)));
        }
        if (visitor_) {
            EnumeratedGraph view;
            view.n = n_;
            view.mask = mask_;
            view.edges = edges_;
            view.degrees = degree_;
            view.max_degree = top;
            view.forgotten_index = f_;
            visitor_(view, worker_);
        }
    }

    const EnumSpec& spec_;
    const EnumVisitor& visitor_;
    int worker_;
    int n_;
    int target_;
    int edge_total_ = 0;
    int cap_ = 0;
    std::vector<int> pair_u_;
    std::vector<int> pair_v_;
    std::vector<int> row_start_;
    std::vector<int> row_of_boundary_;
    RollbackUnionFind uf_;
    std::vector<int> degree_;
    std::vector<Edge> edges_;
    std::uint64_t mask_ = 0;
    std::int64_t f_ = 0;
    Task task_{0, 0};
    std::vector<DegreeClassStats> stats_;
    std::set<std::string> canonical_argmax_;
    std::int64_t canonical_max_ = -1;
};

void validate(const EnumSpec& spec) {
    const int cap = std::min(spec.max_order, kMaskMaxOrder);
    if (spec.n < 4 || spec.n > cap) {
        throw std::invalid_argument("enumeration order n=" + std::to_string(spec.n) +
                                    " outside supported range [4, " + std::to_string(cap) + "]");
    }
    auto check_delta = [&](const std::optional<int>& d, const char* name) {
        if (d && (*d < 3 || *d > spec.n - 1)) {
            throw std::invalid_argument(std::string(name) + " must lie in [3, n-1]");
        }
    };
    check_delta(spec.delta_exact, "delta_exact");
    check_delta(spec.delta_at_most, "delta_at_most");
    if (spec.jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1");
    }
}

}  // namespace

bool enumeration_order_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    // The lowest differing edge index decides: the subset containing it comes first.
    return (a & (diff & (~diff + 1))) != 0;
}

std::optional<Graph> EnumSummary::witness_graph() const {
    if (!witness) {
        return std::nullopt;
    }
    return graph_from_mask(n, *witness);
}

std::optional<Graph> EnumSummary::witness_graph(int max_degree) const {
    if (max_degree < 0 || max_degree >= static_cast<int>(by_max_degree.size()) ||
        !by_max_degree[max_degree].witness) {
        return std::nullopt;
    }
    return graph_from_mask(n, *by_max_degree[max_degree].witness);
}

EnumSummary enumerate_bicyclic(const EnumSpec& spec, const EnumVisitor& visitor) {
    validate(spec);

    std::vector<Task> tasks;
    const int edge_total = spec.n * (spec.n - 1) / 2;
    for (int a = 0; a < edge_total; ++a) {
        for (int b = a + 1; b < edge_total; ++b) {
            tasks.push_back(Task{a, b});
        }
    }

    const int jobs = std::min<int>(spec.jobs, static_cast<int>(tasks.size()));
    std::vector<Walker> walkers;
    walkers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        walkers.emplace_back(spec, visitor, w);
    }

    std::atomic<std::size_t> next{0};
    auto work = [&](Walker& walker) {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            walker.run(tasks[i]);
        }
    };
    if (jobs == 1) {
        work(walkers[0]);
    } else {
        std::vector<std::jthread> threads;
        for (auto& walker : walkers) {
            threads.emplace_back([&] { work(walker); });
        }
    }

    EnumSummary summary;
    summary.n = spec.n;
    summary.by_max_degree.resize(spec.n);
    std::set<std::string> argmax;
    std::int64_t argmax_f = -1;
    for (const Walker& walker : walkers) {
        for (int d = 0; d < spec.n; ++d) {
            merge_into(summary.by_max_degree[d], walker.stats()[d]);
        }
        if (walker.canonical_max() > argmax_f) {
            argmax_f = walker.canonical_max();
            argmax = walker.canonical_argmax();
        } else if (walker.canonical_max() == argmax_f) {
            argmax.insert(walker.canonical_argmax().begin(), walker.canonical_argmax().end());
        }
    }
    DegreeClassStats overall;
    for (const auto& stats : summary.by_max_degree) {
        merge_into(overall, stats);
    }
    summary.count = overall.count;
    summary.max_f = overall.max_f;
    summary.argmax_count = overall.argmax_count;
    summary.witness = overall.witness;
    summary.canonical_argmax.assign(argmax.begin(), argmax.end());
    return summary;
}

}  // namespace findex

#include "findex/histogram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "findex/checked.hpp"

namespace findex {

DegreeHistogram::DegreeHistogram(int delta, std::vector<std::int64_t> counts)
    : delta_(delta), counts_(std::move(counts)) {
    if (delta_ < 1) {
        throw std::invalid_argument("histogram delta must be >= 1");
    }
    if (static_cast<int>(counts_.size()) != delta_) {
        throw std::invalid_argument("histogram needs exactly delta counts");
    }
    for (std::int64_t c : counts_) {
        if (c < 0) {
            throw std::invalid_argument("histogram counts must be non-negative");
        }
    }
    if (counts_.back() < 1) {
        throw std::invalid_argument("histogram must attain its maximum degree (n_delta >= 1)");
    }
}

std::int64_t DegreeHistogram::count(int degree) const {
    if (degree < 1 || degree > delta_) {
        return 0;
    }
    return counts_[degree - 1];
}

std::int64_t DegreeHistogram::order() const {
    std::int64_t total = 0;
    for (std::int64_t c : counts_) {
        total = checked_add(total, c);
    }
    return total;
}

std::int64_t DegreeHistogram::degree_sum() const {
    std::int64_t total = 0;
    for (int i = 1; i <= delta_; ++i) {
        total = checked_add(total, checked_mul(i, counts_[i - 1]));
    }
    return total;
}

std::int64_t DegreeHistogram::excess_weight() const {
    std::int64_t total = 0;
    for (int i = 2; i <= delta_; ++i) {
        total = checked_add(total, checked_mul(i - 1, counts_[i - 1]));
    }
    return total;
}

std::vector<int> DegreeHistogram::degree_sequence() const {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(order()));
    for (int i = delta_; i >= 1; --i) {
        seq.insert(seq.end(), static_cast<std::size_t>(counts_[i - 1]), i);
    }
    return seq;
}

std::string DegreeHistogram::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(counts_[i]);
    }
    return out;
}

DegreeHistogram parse_histogram(const std::string& text) {
    std::vector<std::int64_t> counts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad histogram entry '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad histogram entry '" + item + "'");
        }
        counts.push_back(value);
    }
    if (counts.empty()) {
        throw std::invalid_argument("empty histogram");
    }
    const int delta = static_cast<int>(counts.size());
    return DegreeHistogram(delta, std::move(counts));
}

DegreeHistogram histogram_from_graph(const Graph& g) {
    if (g.size() == 0) {
        throw std::invalid_argument("histogram requires at least one edge");
    }
    const int delta = max_degree(g);
    std::vector<std::int64_t> counts(delta, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d == 0) {
            throw std::invalid_argument("isolated vertex " + std::to_string(v) +
                                        " is outside the bicyclic graph class");
        }
        ++counts[d - 1];
    }
    return DegreeHistogram(delta, std::move(counts));
}

IdentityCheck check_bicyclic_identities(const DegreeHistogram& h) {
    IdentityCheck out;
    out.order = h.order();
    out.degree_sum = h.degree_sum();
    out.excess_weight = h.excess_weight();
    const std::int64_t want_sum = checked_add(checked_mul(2, out.order), 2);
    const std::int64_t want_excess = checked_add(out.order, 2);
    // The two identities are equivalent given sum n_i = n; both are checked
    // so the diagnostic can name each one.
    std::ostringstream why;
    if (out.degree_sum != want_sum) {
        why << "sum i*n_i = " << out.degree_sum << " but 2n+2 = " << want_sum;
    }
    if (out.excess_weight != want_excess) {
        if (!why.str().empty()) {
            why << "; ";
        }
        why << "sum (i-1)*n_i = " << out.excess_weight << " but n+2 = " << want_excess;
    }
    out.diagnostic = why.str();
    out.holds = out.diagnostic.empty();
    return out;
}

std::int64_t f_from_histogram(const DegreeHistogram& h) {
    std::int64_t total = 0;
    for (int i = 1; i <= h.delta(); ++i) {
        total = checked_add(total, checked_mul(checked_cube(i), h.count(i)));
    }
    return total;
}

std::int64_t DeltaPartition::total() const {
    std::int64_t sum = 0;
    for (int p : parts) {
        sum = checked_add(sum, p);
    }
    return sum;
}

DeltaPartition delta_partition(const DegreeHistogram& h) {
    DeltaPartition out;
    for (int part = h.delta() - 1; part >= 1; --part) {
        out.parts.insert(out.parts.end(), static_cast<std::size_t>(h.count(part + 1)), part);
    }
    return out;
}

}  // namespace findex

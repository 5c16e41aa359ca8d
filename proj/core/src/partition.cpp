#include "findex/partition.hpp"

#include <sstream>

#include "findex/checked.hpp"

namespace findex {

ResidueParams residue_params(std::int64_t n, int delta) {
    if (delta < 3) {
        throw std::invalid_argument("delta must be >= 3 for bicyclic graphs");
    }
    if (n < delta + 1) {
        throw std::invalid_argument("n must be >= delta + 1");
    }
    ResidueParams out;
    out.n = n;
    out.delta = delta;
    out.k = n / (delta - 1);
    out.p = static_cast<int>(n % (delta - 1));
    return out;
}

std::vector<std::int64_t> dominant_partition(std::int64_t total, std::int64_t delta) {
    if (total < 1 || delta < 1) {
        throw std::invalid_argument("dominant_partition needs total >= 1 and delta >= 1");
    }
    std::vector<std::int64_t> parts(static_cast<std::size_t>(total / delta), delta);
    if (total % delta != 0) {
        parts.push_back(total % delta);
    }
    return parts;
}

std::int64_t r_value(const DegreeHistogram& h, const ResidueParams& params) {
    if (h.delta() != params.delta) {
        throw std::invalid_argument("histogram delta does not match residue params");
    }
    std::int64_t lower = 0;
    for (int i = 2; i < params.delta; ++i) {
        lower = checked_add(lower, checked_mul(i - 1, h.count(i)));
    }
    const std::int64_t numerator = lower - (params.p + 2);
    if (numerator % (params.delta - 1) != 0) {
        throw std::invalid_argument("r is not integral; histogram " + h.to_string() +
                                    " violates the bicyclic identities");
    }
    return numerator / (params.delta - 1);
}

CaseParams case_params(const DegreeHistogram& h, const ResidueParams& params) {
    CaseParams out;
    out.r = r_value(h, params);
    const std::int64_t total = params.p + out.r + 2;
    const std::int64_t width = params.delta - 2;
    out.t = total / width;
    out.s = total % width;
    return out;
}

DegreeHistogram major_sequence(const ResidueParams& params) {
    using Reason = MajorSequenceUndefined::Reason;
    const int bump = params.p + 3;
    if (bump > params.delta) {
        throw MajorSequenceUndefined(Reason::residue_out_of_range,
                                     "residue p=" + std::to_string(params.p) +
                                         " exceeds delta-3; no closed-form tuple");
    }
    if (bump == params.delta) {
        throw MajorSequenceUndefined(Reason::degree_collision,
                                     "p+3 == delta; tuple slots collide");
    }
    const std::int64_t leaves = params.n - params.k - 1;
    if (leaves < 0 || params.k < 1) {
        throw MajorSequenceUndefined(Reason::order_too_small, "n too small for the tuple shape");
    }
    std::vector<std::int64_t> counts(params.delta, 0);
    counts[0] = leaves;
    counts[bump - 1] += 1;
    counts[params.delta - 1] += params.k;
    return DegreeHistogram(params.delta, std::move(counts));
}

namespace {

class HistogramSearch {
public:
    HistogramSearch(std::int64_t n, int delta) : n_(n), delta_(delta), counts_(delta + 1, 0) {}

    std::optional<HistogramOptimum> run() {
        descend(delta_, n_ + 2, n_, n_);
        if (best_value_ < 0) {
            return std::nullopt;
        }
        std::vector<std::int64_t> counts(best_.begin() + 1, best_.end());
        return HistogramOptimum{DegreeHistogram(delta_, std::move(counts)), best_value_};
    }

private:
    // value tracks n + sum_{i>=2} (i^3 - 1) c_i, which equals sum i^3 n_i once n_1 is filled in.
    void descend(int degree, std::int64_t budget, std::int64_t vertices_left, std::int64_t value) {
        if (degree == 2) {
            if (budget > vertices_left) {
                return;
            }
            counts_[2] = budget;
            counts_[1] = vertices_left - budget;
            const std::int64_t total = value + 7 * budget;
            if (total > best_value_) {
                best_value_ = total;
                best_ = counts_;
            }
            return;
        }
        const std::int64_t weight = degree - 1;
        const std::int64_t gain = static_cast<std::int64_t>(degree) * degree * degree - 1;
        const std::int64_t lowest = degree == delta_ ? 1 : 0;
        for (std::int64_t c = std::min(budget / weight, vertices_left); c >= lowest; --c) {
            const std::int64_t rest = budget - c * weight;
            const std::int64_t left = vertices_left - c;
            // Every remaining vertex contributes at most degree-2 units of weight.
            if (rest > left * (degree - 2)) {
                break;
            }
            const std::int64_t next = value + c * gain;
            const std::int64_t cap = static_cast<std::int64_t>(degree - 1) * (degree - 1) + degree;
            if (best_value_ >= 0 && next + rest * cap <= best_value_) {
                // Bound shrinks as c decreases, so nothing below can win either.
                break;
            }
            counts_[degree] = c;
            descend(degree - 1, rest, left, next);
        }
        counts_[degree] = 0;
    }

    std::int64_t n_;
    int delta_;
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> best_;
    std::int64_t best_value_ = -1;
};

}  // namespace

HistogramOptimum exact_histogram_max(const ResidueParams& params) {
    if (params.delta < 3 || params.n < params.delta + 1) {
        throw std::invalid_argument("exact_histogram_max needs delta >= 3 and n >= delta + 1");
    }
    // n * delta^3 bounds every objective value; reject inputs where that overflows.
    checked_mul(params.n + 2, checked_cube(params.delta));
    auto result = HistogramSearch(params.n, params.delta).run();
    if (!result) {
        throw std::invalid_argument("no feasible histogram for n=" + std::to_string(params.n) +
                                    " delta=" + std::to_string(params.delta));
    }
    return *result;
}

std::string MajorSequenceCheck::diagnostic() const {
    if (agrees()) {
        return {};
    }
    std::ostringstream out;
    out << "corollary gap at n=" << params.n << " delta=" << params.delta << " p=" << params.p
        << ": major " << major.to_string() << " F=" << major_value << ", exact optimum "
        << optimum.argmax.to_string() << " F=" << optimum.value;
    return out.str();
}

std::optional<MajorSequenceCheck> check_major_sequence(const ResidueParams& params) {
    std::optional<DegreeHistogram> major;
    try {
        major = major_sequence(params);
    } catch (const MajorSequenceUndefined&) {
        return std::nullopt;
    }
    return MajorSequenceCheck{params, *major, f_from_histogram(*major), exact_histogram_max(params)};
}

std::vector<MajorSequenceCheck> corollary_gaps(std::int64_t n_max, int delta_max) {
    std::vector<MajorSequenceCheck> gaps;
    for (int delta = 3; delta <= delta_max; ++delta) {
        for (std::int64_t n = delta + 1; n <= n_max; ++n) {
            auto check = check_major_sequence(residue_params(n, delta));
            if (check && !check->agrees()) {
                gaps.push_back(std::move(*check));
            }
        }
    }
    return gaps;
}

}  // namespace findex

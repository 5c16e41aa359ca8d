#include "findex/bounds.hpp"

#include <chrono>
#include <stdexcept>

#include "findex/canonical.hpp"
#include "findex/checked.hpp"
#include "findex/enumeration.hpp"
#include "findex/graph_io.hpp"

namespace findex {

namespace {

std::int64_t leading_coefficient(int delta) {
    const std::int64_t d = delta;
    return checked_add(checked_mul(d, d), d + 2);
}

void require_residue(std::int64_t n, int delta, int p) {
    if (delta < 3) {
        throw std::invalid_argument("delta must be >= 3");
    }
    if (n < 1 || n % (delta - 1) != p) {
        throw std::invalid_argument("n=" + std::to_string(n) + " is not " + std::to_string(p) +
                                    " mod " + std::to_string(delta - 1));
    }
}

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

    std::int64_t elapsed_ms() const {
        if (!enabled_) {
            return 0;
        }
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

struct Empirical {
    std::int64_t max_f = -1;
    std::optional<std::uint64_t> witness;
};

// Best class among maximum degrees [low, high]; ties go to the earlier
// witness in enumeration order.
std::optional<Empirical> pick_empirical(const EnumSummary& summary, int low, int high) {
    Empirical best;
    for (int d = low; d <= high; ++d) {
        const DegreeClassStats& s = summary.by_max_degree[d];
        if (s.count == 0) {
            continue;
        }
        if (s.max_f > best.max_f ||
            (s.max_f == best.max_f && enumeration_order_less(*s.witness, *best.witness))) {
            best.max_f = s.max_f;
            best.witness = s.witness;
        }
    }
    if (best.max_f < 0) {
        return std::nullopt;
    }
    return best;
}

AuditRecord assemble(std::int64_t n, int delta, const AuditOptions& options,
                     const EnumSummary* summary, std::int64_t enumeration_ms) {
    AuditRecord rec;
    Stopwatch closed_clock(options.timings);
    const BoundResult bound = classify_bound(n, delta);
    rec.params = bound.params;
    rec.theorem = bound.theorem;
    rec.closed_form = bound.value;
    rec.runtime_ms.closed = closed_clock.elapsed_ms();

    Stopwatch histogram_clock(options.timings);
    const int low = options.delta_at_most ? 3 : delta;
    rec.histogram_max = -1;
    for (int d = low; d <= delta; ++d) {
        rec.histogram_max =
            std::max(rec.histogram_max, exact_histogram_max(residue_params(n, d)).value);
    }
    rec.runtime_ms.histogram = histogram_clock.elapsed_ms();

    if (summary != nullptr) {
        rec.runtime_ms.enumeration = enumeration_ms;
        if (auto found = pick_empirical(*summary, low, delta)) {
            rec.empirical_max = found->max_f;
            rec.witness_graph6 = to_graph6(graph_from_mask(static_cast<int>(n), *found->witness));
            if (*rec.empirical_max > rec.histogram_max) {
                throw std::logic_error("empirical maximum exceeds the histogram relaxation at n=" +
                                       std::to_string(n) + " delta=" + std::to_string(delta));
            }
        }
    }

    if (!rec.closed_form) {
        rec.status = AuditStatus::no_theorem;
    } else if (!rec.empirical_max) {
        rec.status = AuditStatus::unverified;
    } else {
        rec.gap = *rec.closed_form - *rec.empirical_max;
        if (*rec.gap < 0) {
            rec.status = AuditStatus::violated;
        } else if (*rec.gap == 0) {
            rec.status = AuditStatus::holds_tight;
        } else {
            rec.status = AuditStatus::holds_slack;
        }
    }
    return rec;
}

bool within_cap(std::int64_t n, const AuditOptions& options) {
    return n >= 4 && n <= options.enumeration_cap && n <= kMaskMaxOrder;
}

}  // namespace

std::string_view theorem_tag(Theorem t) {
    switch (t) {
        case Theorem::p0:
            return "T_p0";
        case Theorem::p1:
            return "T_p1";
        case Theorem::general_p:
            return "T_general_p";
        case Theorem::none:
            return "none";
        case Theorem::boundary:
            return "boundary_p_eq_delta_minus_3";
    }
    return "none";
}

Theorem parse_theorem_tag(std::string_view tag) {
    for (Theorem t : {Theorem::p0, Theorem::p1, Theorem::general_p, Theorem::none,
                      Theorem::boundary}) {
        if (theorem_tag(t) == tag) {
            return t;
        }
    }
    throw std::invalid_argument("unknown theorem tag '" + std::string(tag) + "'");
}

std::int64_t bound_p0(std::int64_t n, int delta) {
    require_residue(n, delta, 0);
    return checked_add(checked_mul(leading_coefficient(delta), n), 26);
}

std::int64_t bound_p1(std::int64_t n, int delta) {
    require_residue(n, delta, 1);
    const std::int64_t d = delta;
    return checked_sub(checked_mul(leading_coefficient(delta), n), d * d + d - 6);
}

std::int64_t bound_general_p(std::int64_t n, int delta, int p) {
    if (p < 2 || p > delta - 3) {
        throw std::invalid_argument("general bound needs 2 <= p <= delta - 3");
    }
    require_residue(n, delta, p);
    const std::int64_t q = p;
    const std::int64_t tail = q * q * q + 9 * q * q + 28 * q + 26;
    return checked_add(checked_mul(leading_coefficient(delta), n - q), tail);
}

BoundResult classify_bound(std::int64_t n, int delta) {
    BoundResult out;
    out.params = residue_params(n, delta);
    const int p = out.params.p;
    if (p == 0) {
        out.theorem = Theorem::p0;
        out.value = bound_p0(n, delta);
    } else if (p == 1) {
        out.theorem = Theorem::p1;
        out.value = bound_p1(n, delta);
    } else if (p < delta - 3) {
        out.theorem = Theorem::general_p;
        out.value = bound_general_p(n, delta, p);
    } else if (p == delta - 3) {
        out.theorem = Theorem::boundary;
        out.value = bound_general_p(n, delta, p);
    } else {
        out.theorem = Theorem::none;
    }
    return out;
}

std::string_view status_name(AuditStatus s) {
    switch (s) {
        case AuditStatus::holds_tight:
            return "HOLDS_TIGHT";
        case AuditStatus::holds_slack:
            return "HOLDS_SLACK";
        case AuditStatus::violated:
            return "VIOLATED";
        case AuditStatus::no_theorem:
            return "NO_THEOREM";
        case AuditStatus::unverified:
            return "UNVERIFIED";
    }
    return "UNVERIFIED";
}

AuditStatus parse_status(std::string_view name) {
    for (AuditStatus s : {AuditStatus::holds_tight, AuditStatus::holds_slack, AuditStatus::violated,
                          AuditStatus::no_theorem, AuditStatus::unverified}) {
        if (status_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown audit status '" + std::string(name) + "'");
}

AuditRecord audit(std::int64_t n, int delta, const AuditOptions& options) {
    residue_params(n, delta);  // validates delta >= 3, n >= delta + 1
    if (!within_cap(n, options)) {
        return assemble(n, delta, options, nullptr, 0);
    }
    EnumSpec spec;
    spec.n = static_cast<int>(n);
    spec.jobs = options.jobs;
    spec.max_order = std::max(options.enumeration_cap, spec.n);
    if (options.delta_at_most) {
        spec.delta_at_most = delta;
    } else {
        spec.delta_exact = delta;
    }
    Stopwatch clock(options.timings);
    const EnumSummary summary = enumerate_bicyclic(spec);
    return assemble(n, delta, options, &summary, clock.elapsed_ms());
}

std::vector<AuditRecord> audit_sweep(std::int64_t n_max, const AuditOptions& options) {
    std::vector<AuditRecord> rows;
    for (std::int64_t n = 4; n <= n_max; ++n) {
        std::optional<EnumSummary> summary;
        std::int64_t elapsed = 0;
        if (within_cap(n, options)) {
            EnumSpec spec;
            spec.n = static_cast<int>(n);
            spec.jobs = options.jobs;
            spec.max_order = std::max(options.enumeration_cap, spec.n);
            Stopwatch clock(options.timings);
            summary = enumerate_bicyclic(spec);
            elapsed = clock.elapsed_ms();
        }
        for (int delta = 3; delta <= n - 1; ++delta) {
            rows.push_back(assemble(n, delta, options, summary ? &*summary : nullptr, elapsed));
        }
    }
    return rows;
}

}  // namespace findex

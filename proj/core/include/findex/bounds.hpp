#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "findex/partition.hpp"

namespace findex {

/// Which closed-form upper bound covers a residue class n = (delta-1)k + p.
enum class Theorem {
    p0,          ///< p = 0
    p1,          ///< p = 1
    general_p,   ///< 2 <= p < delta - 3
    none,        ///< p = delta - 2 (p >= 2): no bound stated
    boundary,    ///< p = delta - 3 (p >= 2): general formula, applicability unclear
};

std::string_view theorem_tag(Theorem t);
Theorem parse_theorem_tag(std::string_view tag);

/// (delta^2 + delta + 2) n + 26; requires n = 0 mod (delta - 1).
std::int64_t bound_p0(std::int64_t n, int delta);

/// (delta^2 + delta + 2) n - (delta^2 + delta - 6); requires n = 1 mod (delta - 1).
std::int64_t bound_p1(std::int64_t n, int delta);

/// (delta^2 + delta + 2)(n - p) + p^3 + 9p^2 + 28p + 26; requires
/// n = p mod (delta - 1) and 2 <= p <= delta - 3.
std::int64_t bound_general_p(std::int64_t n, int delta, int p);

struct BoundResult {
    Theorem theorem = Theorem::none;
    /// Absent iff theorem == Theorem::none.
    std::optional<std::int64_t> value;
    ResidueParams params;
};

BoundResult classify_bound(std::int64_t n, int delta);

enum class AuditStatus { holds_tight, holds_slack, violated, no_theorem, unverified };

std::string_view status_name(AuditStatus s);
AuditStatus parse_status(std::string_view name);

struct TierRuntimes {
    std::int64_t closed = 0;
    std::int64_t histogram = 0;
    std::int64_t enumeration = 0;

    friend bool operator==(const TierRuntimes&, const TierRuntimes&) = default;
};

struct AuditRecord {
    ResidueParams params;
    Theorem theorem = Theorem::none;
    std::optional<std::int64_t> closed_form;
    std::int64_t histogram_max = 0;
    std::optional<std::int64_t> empirical_max;
    AuditStatus status = AuditStatus::unverified;
    std::optional<std::int64_t> gap;
    std::optional<std::string> witness_graph6;
    TierRuntimes runtime_ms;

    friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

struct AuditOptions {
    /// Largest n that is enumerated; beyond it the empirical tier is skipped.
    int enumeration_cap = 9;
    int jobs = 1;
    /// Empirical maximum over max degree <= delta instead of exactly delta.
    bool delta_at_most = false;
    /// Record wall-clock milliseconds per tier; otherwise they stay 0 so
    /// reports are reproducible byte for byte.
    bool timings = false;
};

/// Closed form, exact histogram relaxation and (n <= cap) exhaustive
/// enumeration for one (n, delta). Throws std::invalid_argument for delta < 3
/// or n < delta + 1 and std::logic_error if the empirical maximum exceeds the
/// relaxation.
AuditRecord audit(std::int64_t n, int delta, const AuditOptions& options = {});

/// Every (n, delta) with 4 <= n <= n_max and 3 <= delta <= n - 1, ordered by
/// (n, delta). Each n is enumerated once and split by maximum degree.
std::vector<AuditRecord> audit_sweep(std::int64_t n_max, const AuditOptions& options = {});

}  // namespace findex

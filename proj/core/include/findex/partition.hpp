#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "findex/histogram.hpp"

namespace findex {

/// n = (delta - 1) * k + p with 0 <= p <= delta - 2.
struct ResidueParams {
    std::int64_t n = 0;
    int delta = 0;
    std::int64_t k = 0;
    int p = 0;

    friend bool operator==(const ResidueParams&, const ResidueParams&) = default;
};

/// Requires delta >= 3 and n >= delta + 1.
ResidueParams residue_params(std::int64_t n, int delta);

/// Case selector of the domination argument: r = k - n_delta, and
/// p + r + 2 = t * (delta - 2) + s with 0 <= s < delta - 2.
struct CaseParams {
    std::int64_t r = 0;
    std::int64_t t = 0;
    std::int64_t s = 0;
};

/// Parts <= delta with as many parts equal to delta as possible:
/// (delta, ..., delta) or (delta, ..., delta, b).
std::vector<std::int64_t> dominant_partition(std::int64_t total, std::int64_t delta);

/// r = (sum_{i=2}^{delta-1} (i-1) n_i - (p + 2)) / (delta - 1). Throws
/// std::invalid_argument if the division is not exact or the histogram's
/// delta differs from params.delta.
std::int64_t r_value(const DegreeHistogram& h, const ResidueParams& params);

CaseParams case_params(const DegreeHistogram& h, const ResidueParams& params);

/// Why a major sequence is not produced for some (n, delta).
class MajorSequenceUndefined : public std::domain_error {
public:
    enum class Reason { residue_out_of_range, degree_collision, order_too_small };

    MajorSequenceUndefined(Reason reason, const std::string& what)
        : std::domain_error(what), reason_(reason) {}

    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// The r = 0 optimum tuple: n_delta = k, n_{p+3} = 1, n_1 = n - k - 1.
/// Defined only for p + 3 < delta; p > delta - 3 and the p + 3 == delta
/// collision throw MajorSequenceUndefined.
DegreeHistogram major_sequence(const ResidueParams& params);

struct HistogramOptimum {
    DegreeHistogram argmax;
    std::int64_t value = 0;
};

/// Exact maximum of sum i^3 n_i over integer histograms with sum n_i = n,
/// sum i n_i = 2n + 2, n_delta >= 1. Ties resolve to the lexicographically
/// largest (n_delta, n_{delta-1}, ..., n_2). Branch-and-bound over the
/// counts from the top degree down; graph realizability is ignored.
HistogramOptimum exact_histogram_max(const ResidueParams& params);

/// Comparison of the major sequence against the exact optimum at one (n, delta).
struct MajorSequenceCheck {
    ResidueParams params;
    DegreeHistogram major;
    std::int64_t major_value = 0;
    HistogramOptimum optimum;

    bool agrees() const { return major_value == optimum.value; }
    /// One-line "corollary gap" diagnostic; empty when agrees().
    std::string diagnostic() const;
};

/// nullopt where the major sequence is undefined.
std::optional<MajorSequenceCheck> check_major_sequence(const ResidueParams& params);

/// Runs check_major_sequence over 3 <= delta <= delta_max, delta+1 <= n <= n_max
/// and returns the disagreements.
std::vector<MajorSequenceCheck> corollary_gaps(std::int64_t n_max, int delta_max);

}  // namespace findex

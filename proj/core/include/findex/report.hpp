#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findex/bounds.hpp"
#include "findex/histogram.hpp"

namespace findex {

std::string tool_version();

/// Conventions that change results; written into every sweep report.
struct SweepMetadata {
    std::string tool_version;
    /// Only set when the caller asks for a stamp; reports stay reproducible otherwise.
    std::optional<std::string> date;
    int enumeration_cap = 9;
    bool bicyclic_requires_connected = true;
    bool empirical_delta_at_most = false;
    std::string identity_notice;

    friend bool operator==(const SweepMetadata&, const SweepMetadata&) = default;
};

SweepMetadata default_metadata(const AuditOptions& options);

struct SweepTable {
    SweepMetadata metadata;
    std::vector<AuditRecord> rows;

    friend bool operator==(const SweepTable&, const SweepTable&) = default;
};

/// Sorts rows by (n, delta).
SweepTable make_sweep_table(std::vector<AuditRecord> rows, SweepMetadata metadata);

/// One record with the exact field names and order of the audit schema.
std::string audit_record_json(const AuditRecord& rec);
AuditRecord audit_record_from_json(const std::string& text);

std::string sweep_table_json(const SweepTable& table);
SweepTable sweep_table_from_json(const std::string& text);

/// Header n,delta,p,theorem,closed_form,histogram_max,empirical_max,status,gap,witness_graph6
/// then one unquoted row per record; absent values are empty fields.
std::string sweep_table_csv(const SweepTable& table);

/// {"delta":D,"counts":[n_1,...,n_D]}
std::string histogram_json(const DegreeHistogram& h);

}  // namespace findex

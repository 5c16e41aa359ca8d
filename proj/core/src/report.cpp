#include "findex/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#ifndef FINDEX_VERSION
#define FINDEX_VERSION "0.0.0"
#endif

namespace findex {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
ordered_json nullable(const std::optional<T>& value) {
    return value ? ordered_json(*value) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> read_nullable(const ordered_json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) {
        return std::nullopt;
    }
    return v.get<T>();
}

ordered_json record_to_json(const AuditRecord& rec) {
    ordered_json j;
    j["n"] = rec.params.n;
    j["delta"] = rec.params.delta;
    j["p"] = rec.params.p;
    j["k"] = rec.params.k;
    j["theorem"] = std::string(theorem_tag(rec.theorem));
    j["closed_form"] = nullable(rec.closed_form);
    j["histogram_max"] = rec.histogram_max;
    j["empirical_max"] = nullable(rec.empirical_max);
    j["status"] = std::string(status_name(rec.status));
    j["gap"] = nullable(rec.gap);
    j["witness_graph6"] = nullable(rec.witness_graph6);
    j["runtime_ms"] = ordered_json{{"closed", rec.runtime_ms.closed},
                                   {"histogram", rec.runtime_ms.histogram},
                                   {"enumeration", rec.runtime_ms.enumeration}};
    return j;
}

AuditRecord record_from(const ordered_json& j) {
    AuditRecord rec;
    rec.params.n = j.at("n").get<std::int64_t>();
    rec.params.delta = j.at("delta").get<int>();
    rec.params.p = j.at("p").get<int>();
    rec.params.k = j.at("k").get<std::int64_t>();
    rec.theorem = parse_theorem_tag(j.at("theorem").get<std::string>());
    rec.closed_form = read_nullable<std::int64_t>(j, "closed_form");
    rec.histogram_max = j.at("histogram_max").get<std::int64_t>();
    rec.empirical_max = read_nullable<std::int64_t>(j, "empirical_max");
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.gap = read_nullable<std::int64_t>(j, "gap");
    rec.witness_graph6 = read_nullable<std::string>(j, "witness_graph6");
    const auto& rt = j.at("runtime_ms");
    rec.runtime_ms.closed = rt.at("closed").get<std::int64_t>();
    rec.runtime_ms.histogram = rt.at("histogram").get<std::int64_t>();
    rec.runtime_ms.enumeration = rt.at("enumeration").get<std::int64_t>();
    return rec;
}

template <typename T>
std::string csv_field(const std::optional<T>& value) {
    if (!value) {
        return {};
    }
    if constexpr (std::is_same_v<T, std::string>) {
        return *value;
    } else {
        return std::to_string(*value);
    }
}

}  // namespace

std::string tool_version() { return FINDEX_VERSION; }

SweepMetadata default_metadata(const AuditOptions& options) {
    SweepMetadata meta;
    meta.tool_version = tool_version();
    meta.enumeration_cap = options.enumeration_cap;
    meta.empirical_delta_at_most = options.delta_at_most;
    meta.identity_notice =
        "degree-count identities use m = n + 1: sum i*n_i = 2n + 2 and "
        "sum (i-1)*n_i = n + 2 (not 2n and n)";
    return meta;
}

SweepTable make_sweep_table(std::vector<AuditRecord> rows, SweepMetadata metadata) {
    std::stable_sort(rows.begin(), rows.end(), [](const AuditRecord& a, const AuditRecord& b) {
        if (a.params.n != b.params.n) {
            return a.params.n < b.params.n;
        }
        return a.params.delta < b.params.delta;
    });
    return SweepTable{std::move(metadata), std::move(rows)};
}

std::string audit_record_json(const AuditRecord& rec) { return record_to_json(rec).dump(); }

AuditRecord audit_record_from_json(const std::string& text) {
    return record_from(ordered_json::parse(text));
}

std::string sweep_table_json(const SweepTable& table) {
    ordered_json meta;
    meta["tool_version"] = table.metadata.tool_version;
    meta["date"] = nullable(table.metadata.date);
    meta["enumeration_cap"] = table.metadata.enumeration_cap;
    meta["bicyclic_requires_connected"] = table.metadata.bicyclic_requires_connected;
    meta["empirical_degree_filter"] = table.metadata.empirical_delta_at_most ? "at_most" : "exact";
    meta["identity_notice"] = table.metadata.identity_notice;

    ordered_json rows = ordered_json::array();
    for (const auto& rec : table.rows) {
        rows.push_back(record_to_json(rec));
    }
    ordered_json doc;
    doc["metadata"] = std::move(meta);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

SweepTable sweep_table_from_json(const std::string& text) {
    const ordered_json doc = ordered_json::parse(text);
    const auto& meta = doc.at("metadata");
    SweepTable table;
    table.metadata.tool_version = meta.at("tool_version").get<std::string>();
    table.metadata.date = read_nullable<std::string>(meta, "date");
    table.metadata.enumeration_cap = meta.at("enumeration_cap").get<int>();
    table.metadata.bicyclic_requires_connected = meta.at("bicyclic_requires_connected").get<bool>();
    table.metadata.empirical_delta_at_most =
        meta.at("empirical_degree_filter").get<std::string>() == "at_most";
    table.metadata.identity_notice = meta.at("identity_notice").get<std::string>();
    for (const auto& row : doc.at("rows")) {
        table.rows.push_back(record_from(row));
    }
    return table;
}

std::string sweep_table_csv(const SweepTable& table) {
    std::ostringstream out;
    out << "n,delta,p,theorem,closed_form,histogram_max,empirical_max,status,gap,witness_graph6\n";
    for (const auto& rec : table.rows) {
        out << rec.params.n << ',' << rec.params.delta << ',' << rec.params.p << ','
            << theorem_tag(rec.theorem) << ',' << csv_field(rec.closed_form) << ','
            << rec.histogram_max << ',' << csv_field(rec.empirical_max) << ','
            << status_name(rec.status) << ',' << csv_field(rec.gap) << ','
            << csv_field(rec.witness_graph6) << '\n';
    }
    return out.str();
}

std::string histogram_json(const DegreeHistogram& h) {
    ordered_json j;
    j["delta"] = h.delta();
    j["counts"] = h.counts();
    return j.dump();
}

}  // namespace findex

#include <sstream>

#include "doctest.h"
#include "findex/bounds.hpp"
#include "findex/canonical.hpp"
#include "findex/graph_io.hpp"
#include "findex/report.hpp"

using namespace findex;

TEST_CASE("closed forms") {
    CHECK(bound_p0(9, 4) == 224);
    CHECK(bound_p0(4, 3) == 82);
    CHECK(bound_p0(12, 4) == 290);
    CHECK(bound_p1(7, 4) == 140);
    CHECK(bound_p1(9, 5) == 264);
    CHECK(bound_p1(10, 4) == 206);
    CHECK(bound_general_p(14, 7, 2) == 822);
    CHECK(bound_general_p(20, 7, 2) == 1170);
    CHECK(bound_general_p(17, 8, 3) == 1254);  // 74 * 14 + (27 + 81 + 84 + 26)
}

TEST_CASE("closed forms reject the wrong residue class") {
    CHECK_THROWS_AS(bound_p0(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(bound_p1(9, 4), std::invalid_argument);
    CHECK_THROWS_AS(bound_general_p(14, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(bound_general_p(15, 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(bound_general_p(13, 7, 1), std::invalid_argument);
}

TEST_CASE("closed forms increase along each residue class") {
    for (int delta = 3; delta <= 12; ++delta) {
        for (std::int64_t n = delta + 1; n <= 200; ++n) {
            const BoundResult b = classify_bound(n, delta);
            if (!b.value) {
                continue;
            }
            const BoundResult next = classify_bound(n + delta - 1, delta);
            REQUIRE(next.value.has_value());
            CHECK(next.theorem == b.theorem);
            CHECK(*next.value - *b.value == (delta * delta + delta + 2) * (delta - 1));
        }
    }
}

TEST_CASE("theorem classification") {
    CHECK(classify_bound(9, 4).theorem == Theorem::p0);
    CHECK(classify_bound(10, 4).theorem == Theorem::p1);
    CHECK(classify_bound(5, 4).theorem == Theorem::none);
    CHECK_FALSE(classify_bound(5, 4).value.has_value());
    CHECK(classify_bound(14, 7).theorem == Theorem::general_p);
    CHECK(classify_bound(15, 7).theorem == Theorem::general_p);  // p = 3 < 4
    CHECK(classify_bound(16, 7).theorem == Theorem::boundary);   // p = 4 = delta - 3
    CHECK(classify_bound(16, 7).value.has_value());
    CHECK(classify_bound(17, 7).theorem == Theorem::none);       // p = 5 = delta - 2
    CHECK(classify_bound(7, 4).theorem == Theorem::p1);           // p = 1 = delta - 3
    CHECK(classify_bound(5, 3).theorem == Theorem::p1);

    for (Theorem t : {Theorem::p0, Theorem::p1, Theorem::general_p, Theorem::none, Theorem::boundary}) {
        CHECK(parse_theorem_tag(theorem_tag(t)) == t);
    }
    CHECK(theorem_tag(Theorem::boundary) == "boundary_p_eq_delta_minus_3");
    CHECK_THROWS(parse_theorem_tag("T_p9"));
}

TEST_CASE("audit (9, 4) is tight") {
    const AuditRecord rec = audit(9, 4);
    CHECK(rec.theorem == Theorem::p0);
    CHECK(rec.closed_form == 224);
    CHECK(rec.histogram_max == 224);
    CHECK(rec.empirical_max == 224);
    CHECK(rec.status == AuditStatus::holds_tight);
    CHECK(rec.gap == 0);
    REQUIRE(rec.witness_graph6);
    const Graph w = parse_graph6(*rec.witness_graph6);
    auto deg = w.degrees();
    std::sort(deg.rbegin(), deg.rend());
    CHECK(deg == std::vector<int>{4, 4, 4, 3, 1, 1, 1, 1, 1});
}

TEST_CASE("audit (7, 4) is violated with a checkable witness") {
    const AuditRecord rec = audit(7, 4);
    CHECK(rec.closed_form == 140);
    CHECK(rec.histogram_max == 196);
    CHECK(rec.empirical_max == 166);
    CHECK(rec.status == AuditStatus::violated);
    CHECK(rec.gap == -26);
    REQUIRE(rec.witness_graph6);
    const Graph w = parse_graph6(*rec.witness_graph6);
    CHECK(is_bicyclic(w));
    CHECK(max_degree(w) == 4);
    CHECK(forgotten_index(w) == 166);

    const Graph stated(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 6}});
    CHECK(forgotten_index(stated) == 166);
    CHECK(is_bicyclic(stated));
}

TEST_CASE("audit (5, 4) has no theorem") {
    const AuditRecord rec = audit(5, 4);
    CHECK(rec.theorem == Theorem::none);
    CHECK(rec.status == AuditStatus::no_theorem);
    CHECK_FALSE(rec.closed_form.has_value());
    CHECK_FALSE(rec.gap.has_value());
    CHECK(rec.empirical_max == 108);
    const Graph w = parse_graph6(*rec.witness_graph6);
    auto deg = w.degrees();
    std::sort(deg.rbegin(), deg.rend());
    CHECK(deg == std::vector<int>{4, 3, 2, 2, 1});
}

TEST_CASE("audit beyond the enumeration cap is unverified") {
    AuditOptions options;
    options.enumeration_cap = 6;
    const AuditRecord rec = audit(9, 4, options);
    CHECK(rec.status == AuditStatus::unverified);
    CHECK_FALSE(rec.empirical_max.has_value());
    CHECK_FALSE(rec.witness_graph6.has_value());
    CHECK(rec.histogram_max == 224);

    const AuditRecord none = audit(11, 7, options);  // p = 5 = delta - 2
    CHECK(none.status == AuditStatus::no_theorem);
    CHECK_THROWS_AS(audit(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(audit(9, 2), std::invalid_argument);
}

TEST_CASE("delta-at-most audit never drops below the exact-delta audit") {
    AuditOptions at_most;
    at_most.delta_at_most = true;
    for (int delta = 3; delta <= 6; ++delta) {
        const AuditRecord exact = audit(7, delta);
        const AuditRecord loose = audit(7, delta, at_most);
        CHECK(*loose.empirical_max >= *exact.empirical_max);
        CHECK(loose.histogram_max >= exact.histogram_max);
        CHECK(*loose.empirical_max <= loose.histogram_max);
    }
}

TEST_CASE("sweep: soundness, status consistency and agreement with single audits") {
    const auto rows = audit_sweep(8);
    CHECK(rows.size() == 15);
    for (const auto& rec : rows) {
        CAPTURE(rec.params.n);
        CAPTURE(rec.params.delta);
        REQUIRE(rec.empirical_max.has_value());
        CHECK(*rec.empirical_max <= rec.histogram_max);
        if (rec.status == AuditStatus::holds_tight) {
            CHECK(rec.gap == 0);
        }
        if (rec.status == AuditStatus::violated) {
            const Graph w = parse_graph6(*rec.witness_graph6);
            CHECK(forgotten_index(w) > *rec.closed_form);
            CHECK(is_bicyclic(w));
            CHECK(max_degree(w) == rec.params.delta);
        }
        CHECK((rec.status == AuditStatus::no_theorem) == !rec.closed_form.has_value());
        CHECK(audit(rec.params.n, rec.params.delta) == rec);
    }
}

TEST_CASE("audit records survive a JSON round trip") {
    const auto rows = audit_sweep(7);
    for (const auto& rec : rows) {
        CHECK(audit_record_from_json(audit_record_json(rec)) == rec);
    }
    AuditRecord unverified = audit(9, 4, AuditOptions{.enumeration_cap = 5});
    CHECK(audit_record_from_json(audit_record_json(unverified)) == unverified);

    SweepTable table = make_sweep_table(rows, default_metadata({}));
    table.metadata.date = "2026-01-01";
    CHECK(sweep_table_from_json(sweep_table_json(table)) == table);
}

TEST_CASE("record JSON uses the exact schema field order") {
    const std::string text = audit_record_json(audit(5, 4));
    CHECK(text.rfind(R"({"n":5,"delta":4,"p":2,"k":1,"theorem":"none","closed_form":null,"histogram_max":)", 0) == 0);
    CHECK(text.find(R"("runtime_ms":{"closed":0,"histogram":0,"enumeration":0}})") != std::string::npos);
}

TEST_CASE("CSV carries the same data as JSON") {
    const SweepTable table = make_sweep_table(audit_sweep(6), default_metadata({}));
    const std::string csv = sweep_table_csv(table);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,delta,p,theorem,closed_form,histogram_max,empirical_max,status,gap,witness_graph6");
    std::size_t i = 0;
    while (std::getline(in, line)) {
        REQUIRE(i < table.rows.size());
        const AuditRecord& rec = table.rows[i++];
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (line.back() == ',') {
            fields.emplace_back();
        }
        REQUIRE(fields.size() == 10);
        CHECK(fields[0] == std::to_string(rec.params.n));
        CHECK(fields[1] == std::to_string(rec.params.delta));
        CHECK(fields[2] == std::to_string(rec.params.p));
        CHECK(fields[3] == theorem_tag(rec.theorem));
        CHECK(fields[4] == (rec.closed_form ? std::to_string(*rec.closed_form) : ""));
        CHECK(fields[5] == std::to_string(rec.histogram_max));
        CHECK(fields[6] == (rec.empirical_max ? std::to_string(*rec.empirical_max) : ""));
        CHECK(fields[7] == status_name(rec.status));
        CHECK(fields[8] == (rec.gap ? std::to_string(*rec.gap) : ""));
        CHECK(fields[9] == rec.witness_graph6.value_or(""));
    }
    CHECK(i == table.rows.size());
}

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "findex/bounds.hpp"
#include "findex/canonical.hpp"
#include "findex/enumeration.hpp"
#include "findex/graph.hpp"
#include "findex/graph_io.hpp"
#include "findex/histogram.hpp"
#include "findex/partition.hpp"
#include "findex/realizability.hpp"
#include "findex/report.hpp"
#include "json.hpp"

namespace findex::cli {

namespace {

// Usage problems detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int default_jobs() {
    if (const char* env = std::getenv("FINDEX_JOBS")) {
        try {
            const int jobs = std::stoi(env);
            if (jobs >= 1) {
                return jobs;
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

int enumeration_cap(const std::optional<int>& unsafe_cap, std::ostream& err) {
    if (!unsafe_cap) {
        return kDefaultEnumerationCap;
    }
    if (*unsafe_cap > kMaskMaxOrder) {
        throw UsageError("--unsafe-n-max cannot exceed " + std::to_string(kMaskMaxOrder));
    }
    if (*unsafe_cap > kDefaultEnumerationCap) {
        err << "warning: enumeration cap raised to n=" << *unsafe_cap
            << "; runtime grows steeply with n\n";
    }
    return *unsafe_cap;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
}

struct ComputeArgs {
    std::string path;
    std::string format = "auto";
    bool json = false;
    bool allow_disconnected = false;
};

int cmd_compute(const ComputeArgs& a, std::istream& in, std::ostream& out) {
    InputFormat fmt = InputFormat::automatic;
    if (a.format == "edgelist") {
        fmt = InputFormat::edge_list;
    } else if (a.format == "graph6") {
        fmt = InputFormat::graph6;
    }
    const Graph g = parse_graph(read_input(a.path, in), fmt);
    const std::int64_t f = forgotten_index(g);
    const bool bicyclic = is_bicyclic(g, !a.allow_disconnected);
    std::optional<DegreeHistogram> hist;
    std::string hist_note;
    try {
        hist = histogram_from_graph(g);
    } catch (const std::invalid_argument& e) {
        hist_note = e.what();
    }

    if (a.json) {
        nlohmann::ordered_json j;
        j["n"] = g.order();
        j["m"] = g.size();
        j["delta"] = max_degree(g);
        j["F"] = f;
        j["connected"] = is_connected(g);
        j["cycle_rank"] = cycle_rank(g);
        j["bicyclic"] = bicyclic;
        j["histogram"] = hist ? nlohmann::ordered_json::parse(histogram_json(*hist))
                              : nlohmann::ordered_json(nullptr);
        if (g.order() <= 62) {
            j["graph6"] = to_graph6(g);
        }
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "n=" << g.order() << "\n";
    out << "m=" << g.size() << "\n";
    out << "delta=" << max_degree(g) << "\n";
    out << "F=" << f << "\n";
    out << "connected=" << (is_connected(g) ? "true" : "false") << "\n";
    out << "cycle_rank=" << cycle_rank(g) << "\n";
    out << "bicyclic=" << (bicyclic ? "true" : "false") << "\n";
    out << "histogram=" << (hist ? hist->to_string() : "none (" + hist_note + ")") << "\n";
    if (hist) {
        const IdentityCheck check = check_bicyclic_identities(*hist);
        out << "identities=" << (check ? "hold" : check.diagnostic) << "\n";
    }
    return kExitOk;
}

struct AuditArgs {
    std::optional<std::int64_t> n;
    std::optional<int> delta;
    std::optional<std::int64_t> n_max;
    int jobs = 1;
    std::string output;
    std::string format = "json";
    bool strict = false;
    bool delta_at_most = false;
    bool timings = false;
    std::optional<std::string> date;
    std::optional<int> unsafe_n_max;
};

int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
    AuditOptions options;
    options.jobs = a.jobs;
    options.delta_at_most = a.delta_at_most;
    options.timings = a.timings;
    options.enumeration_cap = enumeration_cap(a.unsafe_n_max, err);

    std::vector<AuditRecord> rows;
    if (a.n_max) {
        if (a.n || a.delta) {
            throw UsageError("--n-max cannot be combined with --n/--delta");
        }
        if (*a.n_max < 4) {
            throw UsageError("--n-max must be >= 4");
        }
        err << "auditing n=4.." << *a.n_max << "\n";
        rows = audit_sweep(*a.n_max, options);
    } else {
        if (!a.n || !a.delta) {
            throw UsageError("audit needs --n and --delta, or --n-max");
        }
        if (*a.delta < 3 || *a.n < *a.delta + 1) {
            throw UsageError("audit needs delta >= 3 and n >= delta + 1");
        }
        err << "auditing n=" << *a.n << " delta=" << *a.delta << "\n";
        rows.push_back(audit(*a.n, *a.delta, options));
    }

    SweepMetadata meta = default_metadata(options);
    meta.date = a.date;
    const SweepTable table = make_sweep_table(std::move(rows), std::move(meta));
    const std::string text = a.format == "csv" ? sweep_table_csv(table) : sweep_table_json(table);
    if (a.output.empty()) {
        out << text;
    } else {
        std::ofstream file(a.output, std::ios::binary);
        if (!file) {
            throw UsageError("cannot write " + a.output);
        }
        file << text;
    }

    const bool violated = std::any_of(table.rows.begin(), table.rows.end(), [](const auto& r) {
        return r.status == AuditStatus::violated;
    });
    return a.strict && violated ? kExitViolated : kExitOk;
}

int cmd_major_seq(std::int64_t n, int delta, bool show_oracle, std::ostream& out,
                  std::ostream& err) {
    if (delta < 3 || n < delta + 1) {
        throw UsageError("major-seq needs delta >= 3 and n >= delta + 1");
    }
    const ResidueParams params = residue_params(n, delta);
    try {
        const DegreeHistogram major = major_sequence(params);
        out << major.to_string() << " F=" << f_from_histogram(major) << "\n";
    } catch (const MajorSequenceUndefined& e) {
        const HistogramOptimum best = exact_histogram_max(params);
        err << "major sequence undefined for n=" << n << " delta=" << delta << ": " << e.what()
            << "; exact relaxation optimum " << best.argmax.to_string() << " F=" << best.value
            << "\n";
        return kExitUsage;
    }
    if (show_oracle) {
        const HistogramOptimum best = exact_histogram_max(params);
        out << "oracle " << best.argmax.to_string() << " F=" << best.value << "\n";
    }
    return kExitOk;
}

int cmd_bound(std::int64_t n, int delta, std::ostream& out) {
    if (delta < 3 || n < delta + 1) {
        throw UsageError("bound needs delta >= 3 and n >= delta + 1");
    }
    const BoundResult b = classify_bound(n, delta);
    out << "theorem=" << theorem_tag(b.theorem)
        << " value=" << (b.value ? std::to_string(*b.value) : "null") << "\n";
    return kExitOk;
}

int cmd_realize(const std::string& histogram, std::ostream& out) {
    const DegreeHistogram h = parse_histogram(histogram);
    if (!bicyclic_realizable(h)) {
        const IdentityCheck check = check_bicyclic_identities(h);
        throw UsageError("histogram " + h.to_string() + " is not realizable as a bicyclic graph" +
                         (check ? std::string(" (not graphical)") : " (" + check.diagnostic + ")"));
    }
    const Graph g = realize(h);
    out << to_graph6(g) << "\n" << write_edge_list(g);
    return kExitOk;
}

struct EnumerateArgs {
    int n = 4;
    std::optional<int> delta;
    bool dedup = false;
    bool list = false;
    bool json = false;
    bool allow_disconnected = false;
    int jobs = 1;
    std::optional<int> unsafe_n_max;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
    EnumSpec spec;
    spec.n = a.n;
    spec.delta_exact = a.delta;
    spec.dedup = a.dedup;
    spec.connected = !a.allow_disconnected;
    spec.jobs = a.jobs;
    spec.max_order = enumeration_cap(a.unsafe_n_max, err);
    if (spec.n > spec.max_order) {
        throw UsageError("n=" + std::to_string(spec.n) + " exceeds the enumeration cap " +
                         std::to_string(spec.max_order) + " (see --unsafe-n-max)");
    }

    std::vector<std::vector<std::uint64_t>> buffers(a.jobs);
    EnumVisitor visitor;
    if (a.list) {
        visitor = [&](const EnumeratedGraph& g, int worker) { buffers[worker].push_back(g.mask); };
    }
    err << "enumerating n=" << spec.n << "\n";
    const EnumSummary summary = enumerate_bicyclic(spec, visitor);

    std::vector<std::uint64_t> masks;
    for (auto& b : buffers) {
        masks.insert(masks.end(), b.begin(), b.end());
    }
    std::sort(masks.begin(), masks.end(), enumeration_order_less);

    const std::string witness =
        summary.witness ? to_graph6(graph_from_mask(spec.n, *summary.witness)) : std::string();
    if (a.json) {
        nlohmann::ordered_json j;
        j["n"] = spec.n;
        j["delta"] = a.delta ? nlohmann::ordered_json(*a.delta) : nlohmann::ordered_json(nullptr);
        j["dedup"] = spec.dedup;
        j["connected"] = spec.connected;
        j["count"] = summary.count;
        j["max_F"] = summary.max_f >= 0 ? nlohmann::ordered_json(summary.max_f)
                                        : nlohmann::ordered_json(nullptr);
        j["argmax_count"] = summary.argmax_count;
        j["witness_graph6"] =
            witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(witness);
        if (spec.dedup) {
            j["canonical_argmax"] = summary.canonical_argmax;
        }
        if (a.list) {
            auto graphs = nlohmann::ordered_json::array();
            for (auto m : masks) {
                graphs.push_back(to_graph6(graph_from_mask(spec.n, m)));
            }
            j["graphs"] = std::move(graphs);
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "count=" << summary.count << " max_F=" << summary.max_f
        << " argmax_count=" << summary.argmax_count << " witness=" << witness << "\n";
    for (auto m : masks) {
        out << to_graph6(graph_from_mask(spec.n, m)) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Forgotten topological index toolkit for bicyclic graphs", "findex"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "F-index and structure of one graph");
    c->add_option("path", compute.path, "edge-list or graph6 file ('-' or omitted: stdin)");
    c->add_option("--format", compute.format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    c->add_flag("--json", compute.json, "machine-readable output");
    c->add_flag("--allow-disconnected", compute.allow_disconnected,
                "treat m = n + 1 as bicyclic without requiring connectivity");

    AuditArgs audit_args;
    audit_args.jobs = default_jobs();
    auto* a = app.add_subcommand("audit", "compare closed-form bounds with both oracles");
    a->add_option("--n", audit_args.n, "order");
    a->add_option("--delta", audit_args.delta, "maximum degree");
    a->add_option("--n-max", audit_args.n_max, "sweep every (n, delta) with 4 <= n <= N");
    a->add_option("--jobs", audit_args.jobs, "enumeration workers (default $FINDEX_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    a->add_option("--output", audit_args.output, "write the report to a file");
    a->add_option("--format", audit_args.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    a->add_flag("--strict", audit_args.strict, "exit 1 if any record is VIOLATED");
    a->add_flag("--delta-at-most", audit_args.delta_at_most,
                "empirical maximum over max degree <= delta");
    a->add_flag("--timings", audit_args.timings, "record per-tier runtimes");
    a->add_option("--date", audit_args.date, "date stamp written into the metadata");
    a->add_option("--unsafe-n-max", audit_args.unsafe_n_max, "raise the enumeration cap");

    std::int64_t ms_n = 0;
    int ms_delta = 0;
    bool ms_oracle = false;
    auto* ms = app.add_subcommand("major-seq", "major degree histogram for (n, delta)");
    ms->add_option("--n", ms_n, "order")->required();
    ms->add_option("--delta", ms_delta, "maximum degree")->required();
    ms->add_flag("--oracle", ms_oracle, "also print the exact relaxation optimum");

    std::int64_t b_n = 0;
    int b_delta = 0;
    auto* b = app.add_subcommand("bound", "closed-form upper bound for (n, delta)");
    b->add_option("--n", b_n, "order")->required();
    b->add_option("--delta", b_delta, "maximum degree")->required();

    std::string histogram;
    auto* r = app.add_subcommand("realize", "connected bicyclic graph with a given histogram");
    r->add_option("--histogram", histogram, "n_1,n_2,...,n_delta")->required();

    EnumerateArgs enumerate_args;
    enumerate_args.jobs = default_jobs();
    auto* e = app.add_subcommand("enumerate", "exhaustive bicyclic graph enumeration");
    e->add_option("--n", enumerate_args.n, "order")->required();
    e->add_option("--delta", enumerate_args.delta, "keep max degree exactly delta");
    e->add_flag("--dedup", enumerate_args.dedup, "one graph per isomorphism class");
    e->add_flag("--list", enumerate_args.list, "print every emitted graph as graph6");
    e->add_flag("--json", enumerate_args.json, "machine-readable output");
    e->add_flag("--allow-disconnected", enumerate_args.allow_disconnected,
                "drop the connectivity requirement");
    e->add_option("--jobs", enumerate_args.jobs, "workers (default $FINDEX_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    e->add_option("--unsafe-n-max", enumerate_args.unsafe_n_max, "raise the enumeration cap");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_compute(compute, in, out);
        }
        if (a->parsed()) {
            return cmd_audit(audit_args, out, err);
        }
        if (ms->parsed()) {
            return cmd_major_seq(ms_n, ms_delta, ms_oracle, out, err);
        }
        if (b->parsed()) {
            return cmd_bound(b_n, b_delta, out);
        }
        if (r->parsed()) {
            return cmd_realize(histogram, out);
        }
        if (e->parsed()) {
            return cmd_enumerate(enumerate_args, out, err);
        }
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace findex::cli

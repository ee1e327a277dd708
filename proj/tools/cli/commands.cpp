#include "commands.hpp"

#include "report.hpp"

#include <resolvent/parallel.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace resolvent::cli {

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Disconnected:
    case ErrorKind::ConnectivityRetryExhausted: return exit_disconnected;
    case ErrorKind::CapacityExceeded:
    case ErrorKind::UnsupportedSize: return exit_capacity;
    default: return exit_parse;
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SourceOptions {
    std::vector<std::string> gens;
    std::string file;
    std::string n_range;
};

struct OrderRange {
    int lo = 0;
    int hi = 0;
};

OrderRange parse_range(const std::string& text) {
    auto parse = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::ParseError, "bad --n value '" + text + "'");
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = parse(text);
        return {n, n};
    }
    OrderRange r{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
    if (r.lo > r.hi) throw Error(ErrorKind::ParseError, "empty --n range '" + text + "'");
    return r;
}

// Graph files hold either graph6 lines or a single edge list; an edge list
// starts with its vertex count, and digits are never valid graph6 bytes.
bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return line[pos] >= '0' && line[pos] <= '9';
    }
    return false;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

/// Materialises --gen / --file sources (stdin when neither is given and
/// `stdin_default`), or streams --n enumerations.
class Sources {
public:
    Sources(const SourceOptions& opts, bool stdin_default, bool allow_enumeration) {
        if (!opts.n_range.empty()) {
            if (!allow_enumeration) throw Error(ErrorKind::ParseError, "--n is not valid here");
            OrderRange r = parse_range(opts.n_range);
            stream_ = enumerate_connected_range(r.lo, r.hi);
            return;
        }
        std::vector<GraphRecord> records;
        for (const auto& spec : opts.gens) {
            GraphRecord rec;
            rec.graph = generate(spec);
            rec.id = spec;
            rec.source = RecordSource::generator;
            records.push_back(std::move(rec));
        }
        std::string path = opts.file;
        if (path.empty() && opts.gens.empty()) {
            if (!stdin_default) throw Error(ErrorKind::ParseError, "no input: give --gen, --file or --n");
            path = "-";
        }
        if (!path.empty()) {
            text_ = read_input(path);
            if (looks_like_edge_list(text_)) {
                GraphRecord rec;
                rec.graph = parse_edge_list(text_);
                rec.id = rec.graph.order() <= 62 ? emit_graph6(rec.graph) : path;
                rec.source = RecordSource::file;
                records.push_back(std::move(rec));
            } else {
                std::istringstream in(text_);
                auto lines = graph6_lines(in);
                while (auto rec = lines->next()) records.push_back(std::move(*rec));
            }
        }
        stream_ = from_records(std::move(records));
    }

    GraphStream& stream() { return *stream_; }

private:
    std::string text_;
    std::unique_ptr<GraphStream> stream_;
};

Json source_inputs(const SourceOptions& s) {
    Json j = Json::object();
    if (!s.n_range.empty()) j["n"] = s.n_range;
    if (!s.gens.empty()) j["gen"] = s.gens;
    if (!s.file.empty()) j["file"] = s.file;
    return j;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("RESOLVENT_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return resolve_jobs(0);
}

void add_source_options(CLI::App* cmd, SourceOptions& s, bool with_n) {
    cmd->add_option("--gen", s.gens, "Generator spec name:param[:param], e.g. cycle:7 (repeatable)");
    cmd->add_option("--file", s.file, "graph6 or edge-list file ('-' for stdin)");
    if (with_n) cmd->add_option("--n", s.n_range, "Exhaustive corpus order N or range LO..HI (N <= 7)");
}

// ----------------------------------------------------------------- solve

struct SolveOptions {
    SourceOptions source;
    bool beta = false, res = false, bas = false, randk = false, all = false;
};

Compute selection(const SolveOptions& o) {
    if (o.all || !(o.beta || o.res || o.bas || o.randk)) return Compute::all;
    unsigned bits = 0;
    if (o.beta) bits |= static_cast<unsigned>(Compute::beta);
    if (o.res) bits |= static_cast<unsigned>(Compute::res);
    if (o.bas) bits |= static_cast<unsigned>(Compute::bas);
    if (o.randk) bits |= static_cast<unsigned>(Compute::randk);
    return static_cast<Compute>(bits);
}

Json compute_names(Compute c) {
    Json j = Json::array();
    if (has(c, Compute::beta)) j.push_back("beta");
    if (has(c, Compute::res)) j.push_back("res");
    if (has(c, Compute::bas)) j.push_back("bas");
    if (has(c, Compute::randk)) j.push_back("randk");
    return j;
}

Report cmd_solve(const SolveOptions& o) {
    const auto start = Clock::now();
    Sources sources(o.source, true, false);
    Report r;
    r.command = "solve";
    r.inputs = source_inputs(o.source);
    const Compute what = selection(o);
    r.inputs["compute"] = compute_names(what);
    while (auto rec = sources.stream().next()) {
        if (!is_connected(rec->graph))
            throw Error(ErrorKind::Disconnected, "input " + std::to_string(rec->index) + " (" + rec->id + ")");
        r.solved.push_back({rec->index, rec->id, solve(rec->graph, what)});
    }
    r.summary["graphs"] = r.solved.size();
    r.timing["wall_seconds"] = seconds_since(start);
    return r;
}

// ------------------------------------------------------------------ scan

struct ScanOptions {
    SourceOptions source;
    bool randk = false;
    std::optional<int> beta;
    std::optional<int> res;
    bool twins = false;
    bool no_twins = false;
    unsigned jobs = 0;
};

struct Scanned {
    bool connected = true;
    bool has_twins = false;
    SolveReport report;
};

Report cmd_scan(const ScanOptions& o) {
    const auto start = Clock::now();
    Sources sources(o.source, false, true);
    Report r;
    r.command = "scan";
    r.inputs = source_inputs(o.source);
    Json filters = Json::object();
    if (o.randk) filters["randk"] = true;
    if (o.beta) filters["beta"] = *o.beta;
    if (o.res) filters["res"] = *o.res;
    if (o.twins) filters["twins"] = true;
    if (o.no_twins) filters["twins"] = false;
    r.inputs["filters"] = filters;

    const unsigned jobs = o.jobs ? o.jobs : default_jobs();
    std::map<std::pair<int, int>, std::uint64_t> cells;
    std::uint64_t scanned = 0, skipped = 0;
    std::vector<GraphRecord> batch;
    std::vector<Scanned> out;
    for (;;) {
        batch.clear();
        while (batch.size() < 4096) {
            auto rec = sources.stream().next();
            if (!rec) break;
            batch.push_back(std::move(*rec));
        }
        if (batch.empty()) break;
        parallel_map(batch, out, jobs, [](const GraphRecord& rec) {
            Scanned s;
            if (!is_connected(rec.graph)) {
                s.connected = false;
                return s;
            }
            s.report = solve(rec.graph);
            s.has_twins = !twin_pairs(rec.graph).empty();
            return s;
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const Scanned& s = out[i];
            if (!s.connected) {
                ++skipped;
                continue;
            }
            ++scanned;
            ++cells[{s.report.beta, s.report.res}];
            if (o.randk && !s.report.is_randomly_k) continue;
            if (o.beta && s.report.beta != *o.beta) continue;
            if (o.res && s.report.res != *o.res) continue;
            if (o.twins && !s.has_twins) continue;
            if (o.no_twins && s.has_twins) continue;
            r.solved.push_back({batch[i].index, batch[i].id, s.report});
        }
    }
    r.summary["graphs_scanned"] = scanned;
    r.summary["skipped_disconnected"] = skipped;
    r.summary["matches"] = r.solved.size();
    Json cell_list = Json::array();
    for (auto& [key, count] : cells) cell_list.push_back(Json{{"beta", key.first}, {"res", key.second}, {"count", count}});
    r.summary["cells"] = std::move(cell_list);
    r.timing["wall_seconds"] = seconds_since(start);
    r.timing["jobs"] = jobs;
    return r;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    SourceOptions source;
    bool all_verdicts = false;
    bool keep_going = false;
    unsigned jobs = 0;
};

Report cmd_verify(const VerifyOptions& o, const Hooks& hooks) {
    const auto start = Clock::now();
    Sources sources(o.source, false, true);
    Report r;
    r.command = "verify";
    r.inputs = source_inputs(o.source);
    r.inputs["all_verdicts"] = o.all_verdicts;

    SuiteOptions so;
    so.jobs = o.jobs ? o.jobs : default_jobs();
    so.keep_all_verdicts = o.all_verdicts;
    so.stop_on_failure = !o.keep_going;
    so.solver = hooks.verify_solver;
    SuiteResult result = run_suite(sources.stream(), so);

    r.verdicts = std::move(result.verdicts);
    r.summary["graphs_checked"] = result.graphs_checked;
    r.summary["skipped_disconnected"] = result.skipped_disconnected;
    r.summary["failures"] = result.failures();
    r.summary["stopped_early"] = result.stopped_early;
    Json table = Json::object();
    Json per_theorem_time = Json::object();
    for (TheoremId id : all_theorems) {
        const auto& t = result.tally(id);
        table[std::string(to_string(id))] = Json{{"pass", t.pass}, {"vacuous", t.vacuous}, {"fail", t.fail}};
        per_theorem_time[std::string(to_string(id))] = std::chrono::duration<double>(t.elapsed).count();
    }
    r.summary["theorems"] = std::move(table);
    if (result.failures() > 0) {
        for (const auto& v : r.verdicts)
            if (v.outcome == Outcome::fail) {
                r.summary["reproducer"] = Json{{"graph", v.graph_id}, {"theorem", std::string(to_string(v.theorem))}};
                break;
            }
    }
    r.timing["wall_seconds"] = seconds_since(start);
    r.timing["jobs"] = so.jobs;
    r.timing["per_theorem_seconds"] = std::move(per_theorem_time);
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Metric dimension, resolving number and basis number of small graphs", "resolvent"};
    app.require_subcommand(1);
    std::string format_name = "json";
    app.add_option("--format", format_name, "Report format: json, csv or plain")->capture_default_str();

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Compute beta, res, bas and the randomly k-dimensional property");
    add_source_options(solve_cmd, solve_opts.source, false);
    solve_cmd->add_flag("--beta", solve_opts.beta, "Compute the metric dimension");
    solve_cmd->add_flag("--res", solve_opts.res, "Compute the resolving number");
    solve_cmd->add_flag("--bas", solve_opts.bas, "Compute the basis number");
    solve_cmd->add_flag("--randk", solve_opts.randk, "Decide randomly k-dimensional");
    solve_cmd->add_flag("--all", solve_opts.all, "Compute everything (default)");
    solve_cmd->add_option("--format", format_name, "Report format: json, csv or plain");

    ScanOptions scan_opts;
    auto* scan_cmd = app.add_subcommand("scan", "Solve a corpus and keep the graphs matching the filters");
    add_source_options(scan_cmd, scan_opts.source, true);
    scan_cmd->add_flag("--randk", scan_opts.randk, "Keep randomly k-dimensional graphs");
    scan_cmd->add_option("--beta", scan_opts.beta, "Keep graphs with this metric dimension");
    scan_cmd->add_option("--res", scan_opts.res, "Keep graphs with this resolving number");
    auto* twins = scan_cmd->add_flag("--twins", scan_opts.twins, "Keep graphs with a twin pair");
    scan_cmd->add_flag("--no-twins", scan_opts.no_twins, "Keep twin-free graphs")->excludes(twins);
    scan_cmd->add_option("--jobs", scan_opts.jobs, "Worker threads (default $RESOLVENT_JOBS or all cores)");
    scan_cmd->add_option("--format", format_name, "Report format: json, csv or plain");

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Run every theorem check over a corpus");
    add_source_options(verify_cmd, verify_opts.source, true);
    verify_cmd->add_flag("--all-verdicts", verify_opts.all_verdicts, "Report every verdict, not only failures");
    verify_cmd->add_flag("--keep-going", verify_opts.keep_going, "Do not stop after the first failing batch");
    verify_cmd->add_option("--jobs", verify_opts.jobs, "Worker threads (default $RESOLVENT_JOBS or all cores)");
    verify_cmd->add_option("--format", format_name, "Report format: json, csv or plain");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    const auto format = parse_format(format_name);
    if (!format) {
        err << "error: unknown format '" << format_name << "'\n";
        return exit_parse;
    }

    try {
        Report report;
        if (*solve_cmd) report = cmd_solve(solve_opts);
        else if (*scan_cmd) report = cmd_scan(scan_opts);
        else report = cmd_verify(verify_opts, hooks);
        report.inputs["format"] = format_name;
        write_report(out, report, *format);
        if (report.command == "verify" && report.summary.value("failures", 0) > 0) {
            err << "theorem failure; reproducer: " << report.summary["reproducer"].dump() << '\n';
            return exit_theorem_failure;
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace resolvent::cli

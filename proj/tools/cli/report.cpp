#include "report.hpp"

#include <sstream>

namespace resolvent::cli {

std::optional<Format> parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "plain") return Format::plain;
    return std::nullopt;
}

namespace {

Json set_json(VertexSet s) { return Json(s.ordered()); }

std::string set_text(VertexSet s) {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

Json to_json(const SolveReport& r) {
    Json j;
    j["n"] = r.order;
    j["m"] = r.edge_count;
    if (has(r.computed, Compute::beta)) {
        j["beta"] = r.beta;
        j["sample_basis"] = set_json(r.sample_basis);
    }
    if (has(r.computed, Compute::res)) j["res"] = r.res;
    if (has(r.computed, Compute::bas)) {
        j["bas"] = r.bas;
        j["all_bases_count"] = r.all_bases_count;
    }
    if (has(r.computed, Compute::randk)) {
        j["k"] = r.k;
        j["is_randomly_k"] = r.is_randomly_k;
    }
    if (has(r.computed, Compute::beta) && has(r.computed, Compute::res)) {
        if (r.non_resolving_witness)
            j["non_resolving_witness"] = Json{{"set", set_json(r.non_resolving_witness->set)},
                                              {"pair", {r.non_resolving_witness->pair.first,
                                                        r.non_resolving_witness->pair.second}}};
        else
            j["non_resolving_witness"] = nullptr;
    }
    return j;
}

Json to_json(const SolvedGraph& g) {
    Json j;
    j["index"] = g.index;
    j["graph"] = g.graph;
    const Json fields = to_json(g.report);
    for (auto& [k, v] : fields.items()) j[k] = v;
    return j;
}

Json to_json(const TheoremVerdict& v) {
    Json j;
    j["graph_index"] = v.graph_index;
    j["graph"] = v.graph_id;
    j["theorem"] = std::string(to_string(v.theorem));
    j["outcome"] = std::string(to_string(v.outcome));
    j["vacuity_reason"] = v.vacuity_reason.empty() ? Json(nullptr) : Json(v.vacuity_reason);
    if (v.counterexample) {
        Json sets = Json::array();
        for (VertexSet s : v.counterexample->sets) sets.push_back(set_json(s));
        j["counterexample"] = Json{{"detail", v.counterexample->detail},
                                   {"vertices", v.counterexample->vertices},
                                   {"sets", sets}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    Json results = Json::array();
    for (const auto& g : r.solved) results.push_back(to_json(g));
    for (const auto& v : r.verdicts) results.push_back(to_json(v));
    j["results"] = std::move(results);
    j["summary"] = r.summary;
    j["timing"] = r.timing;
    return j;
}

namespace {

void write_csv(std::ostream& out, const Report& r) {
    if (!r.verdicts.empty() || r.command == "verify") {
        out << "graph_index,graph,theorem,outcome,vacuity_reason,detail,vertices,sets\n";
        for (const auto& v : r.verdicts) {
            std::string sets;
            if (v.counterexample)
                for (VertexSet s : v.counterexample->sets) {
                    if (!sets.empty()) sets += ';';
                    sets += set_text(s);
                }
            std::string vertices;
            if (v.counterexample)
                for (Vertex x : v.counterexample->vertices) {
                    if (!vertices.empty()) vertices += ' ';
                    vertices += std::to_string(x);
                }
            out << v.graph_index << ',' << csv_field(v.graph_id) << ',' << to_string(v.theorem) << ','
                << to_string(v.outcome) << ',' << csv_field(v.vacuity_reason) << ','
                << csv_field(v.counterexample ? v.counterexample->detail : "") << ',' << vertices << ','
                << sets << '\n';
        }
        return;
    }
    out << "index,graph,n,m,beta,res,bas,k,is_randomly_k,sample_basis,all_bases_count,witness_set,witness_pair\n";
    for (const auto& g : r.solved) {
        const SolveReport& s = g.report;
        const bool b = has(s.computed, Compute::beta), rs = has(s.computed, Compute::res),
                   bs = has(s.computed, Compute::bas), rk = has(s.computed, Compute::randk);
        out << g.index << ',' << csv_field(g.graph) << ',' << s.order << ',' << s.edge_count << ',';
        out << (b ? std::to_string(s.beta) : "") << ',' << (rs ? std::to_string(s.res) : "") << ','
            << (bs ? std::to_string(s.bas) : "") << ',' << (rk ? std::to_string(s.k) : "") << ','
            << (rk ? (s.is_randomly_k ? "true" : "false") : "") << ',' << (b ? set_text(s.sample_basis) : "") << ','
            << (bs ? std::to_string(s.all_bases_count) : "") << ',';
        if (s.non_resolving_witness)
            out << set_text(s.non_resolving_witness->set) << ',' << s.non_resolving_witness->pair.first << ' '
                << s.non_resolving_witness->pair.second;
        else
            out << ',';
        out << '\n';
    }
}

void write_plain(std::ostream& out, const Report& r) {
    out << "resolvent " << r.command << " (schema " << schema_version << ")\n";
    out << "inputs: " << r.inputs.dump() << '\n';
    for (const auto& g : r.solved) {
        const SolveReport& s = g.report;
        out << '[' << g.index << "] " << g.graph << "  n=" << s.order << " m=" << s.edge_count;
        if (has(s.computed, Compute::beta)) out << " beta=" << s.beta;
        if (has(s.computed, Compute::res)) out << " res=" << s.res;
        if (has(s.computed, Compute::bas)) out << " bas=" << s.bas;
        if (has(s.computed, Compute::randk))
            out << " k=" << s.k << " randomly_k=" << (s.is_randomly_k ? "true" : "false");
        if (has(s.computed, Compute::beta)) out << " basis=" << s.sample_basis.to_string();
        if (has(s.computed, Compute::bas)) out << " bases=" << s.all_bases_count;
        if (s.non_resolving_witness)
            out << " witness=" << s.non_resolving_witness->set.to_string() << " pair=("
                << s.non_resolving_witness->pair.first << ',' << s.non_resolving_witness->pair.second << ')';
        out << '\n';
    }
    for (const auto& v : r.verdicts) {
        out << '[' << v.graph_index << "] " << v.graph_id << "  " << to_string(v.theorem) << ' '
            << to_string(v.outcome);
        if (!v.vacuity_reason.empty()) out << " (" << v.vacuity_reason << ')';
        if (v.counterexample) {
            out << ": " << v.counterexample->detail;
            if (!v.counterexample->vertices.empty()) {
                out << " vertices=";
                for (std::size_t i = 0; i < v.counterexample->vertices.size(); ++i)
                    out << (i ? "," : "") << v.counterexample->vertices[i];
            }
            for (VertexSet s : v.counterexample->sets) out << " set=" << s.to_string();
        }
        out << '\n';
    }
    out << "summary: " << r.summary.dump() << '\n';
    out << "timing: " << r.timing.dump() << '\n';
}

} // namespace

void write_report(std::ostream& out, const Report& r, Format format) {
    switch (format) {
    case Format::json: out << to_json(r).dump(2) << '\n'; break;
    case Format::csv: write_csv(out, r); break;
    case Format::plain: write_plain(out, r); break;
    }
}

} // namespace resolvent::cli

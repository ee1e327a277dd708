#include "resolvent/invariants.hpp"

#include "resolvent/error.hpp"
#include "resolvent/parallel.hpp"

#include <algorithm>

namespace resolvent {

std::string_view to_string(TheoremId id) noexcept {
    switch (id) {
    case TheoremId::extremal_dimension: return "extremal_dimension";
    case TheoremId::twin_observation: return "twin_observation";
    case TheoremId::res_extremes: return "res_extremes";
    case TheoremId::twin_free: return "twin_free";
    case TheoremId::min_degree: return "min_degree";
    case TheoremId::two_connected: return "two_connected";
    case TheoremId::no_adjacent_degree_two: return "no_adjacent_degree_two";
    case TheoremId::separating_set_structure: return "separating_set_structure";
    case TheoremId::max_degree_lower: return "max_degree_lower";
    case TheoremId::nonadjacent_degree_sum: return "nonadjacent_degree_sum";
    case TheoremId::clique_bound: return "clique_bound";
    case TheoremId::common_neighbors: return "common_neighbors";
    case TheoremId::max_degree_upper: return "max_degree_upper";
    case TheoremId::randomly_2_characterization: return "randomly_2_characterization";
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) noexcept {
    for (TheoremId id : all_theorems)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::vacuous: return "vacuous";
    case Outcome::fail: return "fail";
    }
    return "unknown";
}

Subject make_subject(Graph g, const Solver& solver) {
    DistanceMatrix dm = all_pairs_distances(g);
    SolveReport report = solver ? solver(g) : solve(g);
    GraphSummary summary = summarize(g);
    return Subject{std::move(g), std::move(dm), std::move(report), std::move(summary)};
}

namespace {

TheoremVerdict verdict(TheoremId id) {
    TheoremVerdict v;
    v.theorem = id;
    return v;
}

TheoremVerdict vacuous(TheoremId id, std::string reason) {
    TheoremVerdict v = verdict(id);
    v.outcome = Outcome::vacuous;
    v.vacuity_reason = std::move(reason);
    return v;
}

TheoremVerdict failed(TheoremId id, std::string detail, std::vector<Vertex> vertices = {},
                      std::vector<VertexSet> sets = {}) {
    TheoremVerdict v = verdict(id);
    v.outcome = Outcome::fail;
    v.counterexample = Counterexample{std::move(detail), std::move(vertices), std::move(sets)};
    return v;
}

std::string num(long long x) { return std::to_string(x); }

bool randomly(const Subject& s) { return s.report.is_randomly_k; }
int k_of(const Subject& s) { return s.report.k; }

} // namespace

TheoremVerdict check_extremal_dimension(const Subject& s) {
    constexpr auto id = TheoremId::extremal_dimension;
    const int n = s.graph.order();
    const int beta = s.report.beta;
    const bool path = is_path(s.graph);
    if ((beta == 1) != path)
        return failed(id, "beta=" + num(beta) + " but is_path=" + (path ? "true" : "false"));
    // For n = 1 the second clause would read beta = 0; it starts at n = 2.
    if (n >= 2) {
        const bool complete = is_complete(s.graph);
        if ((beta == n - 1) != complete)
            return failed(id, "beta=" + num(beta) + ", n-1=" + num(n - 1) + " but is_complete=" +
                                  (complete ? "true" : "false"));
    }
    return verdict(id);
}

TheoremVerdict check_twin_observation(const Subject& s) {
    constexpr auto id = TheoremId::twin_observation;
    if (s.summary.twin_pairs.empty()) return vacuous(id, "no twin pairs");
    const VertexSet basis = s.report.sample_basis;
    for (auto [u, v] : s.summary.twin_pairs)
        if (!basis.contains(u) && !basis.contains(v))
            return failed(id, "resolving set misses twin pair", {u, v}, {basis});
    return verdict(id);
}

TheoremVerdict check_res_extremes(const Subject& s) {
    constexpr auto id = TheoremId::res_extremes;
    const int n = s.graph.order();
    const int res = s.report.res;
    const bool tiny_path = n <= 2; // connected graphs of order <= 2 are P_1 and P_2
    if ((res == 1) != tiny_path)
        return failed(id, "res=" + num(res) + " with n=" + num(n));
    const bool twins = !s.summary.twin_pairs.empty();
    if (n >= 2 && (res == n - 1) != twins) {
        std::vector<Vertex> pair;
        if (twins) pair = {s.summary.twin_pairs.front().first, s.summary.twin_pairs.front().second};
        return failed(id, "res=" + num(res) + ", n-1=" + num(n - 1) + ", twins=" + (twins ? "yes" : "no"), pair);
    }
    return verdict(id);
}

TheoremVerdict check_twin_free(const Subject& s) {
    constexpr auto id = TheoremId::twin_free;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (is_complete(s.graph)) return vacuous(id, "graph is complete");
    if (!s.summary.twin_pairs.empty()) {
        auto [u, v] = s.summary.twin_pairs.front();
        return failed(id, "twin pair in a randomly k-dimensional non-complete graph", {u, v});
    }
    return verdict(id);
}

TheoremVerdict check_min_degree(const Subject& s) {
    constexpr auto id = TheoremId::min_degree;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (k_of(s) < 2) return vacuous(id, "k < 2");
    if (s.summary.min_degree < 2) {
        for (Vertex v = 0; v < s.graph.order(); ++v)
            if (s.graph.degree(v) < 2) return failed(id, "vertex of degree " + num(s.graph.degree(v)), {v});
    }
    return verdict(id);
}

TheoremVerdict check_two_connected(const Subject& s) {
    constexpr auto id = TheoremId::two_connected;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (k_of(s) < 2) return vacuous(id, "k < 2");
    if (!s.summary.cut_vertices.empty())
        return failed(id, "cut vertex present", s.summary.cut_vertices.ordered(), {s.summary.cut_vertices});
    return verdict(id);
}

TheoremVerdict check_no_adjacent_degree_two(const Subject& s) {
    constexpr auto id = TheoremId::no_adjacent_degree_two;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (k_of(s) < 4) return vacuous(id, "k < 4");
    for (auto [u, v] : s.graph.edges())
        if (s.graph.degree(u) == 2 && s.graph.degree(v) == 2)
            return failed(id, "adjacent vertices of degree 2", {u, v});
    return verdict(id);
}

TheoremVerdict check_separating_set_structure(const Subject& s) {
    constexpr auto id = TheoremId::separating_set_structure;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    const int n = s.graph.order();
    const int size = k_of(s) - 1;
    std::optional<TheoremVerdict> failure;
    int separating = 0;
    std::vector<int> component(static_cast<std::size_t>(n), -1);

    for_each_combination(n, size, [&](VertexSet t) {
        const int parts = component_count(s.graph, t);
        if (parts < 2) return true;
        ++separating;
        if (parts != 2) {
            failure = failed(id, "G - T has " + num(parts) + " components", {}, {t});
            return false;
        }
        // Label the two sides of G - T.
        std::fill(component.begin(), component.end(), -1);
        VertexSet left = s.graph.vertices() - t;
        int label = 0;
        while (!left.empty()) {
            VertexSet seen{left.front()}, frontier = seen;
            while (!frontier.empty()) {
                VertexSet next;
                for (Vertex v : frontier) next = next | s.graph.neighbors(v);
                next = next - seen - t;
                seen = seen | next;
                frontier = next;
            }
            for (Vertex v : seen) component[static_cast<std::size_t>(v)] = label;
            left = left - seen;
            ++label;
        }
        const VertexSet outside = s.graph.vertices() - t;
        for (Vertex u : outside)
            for (Vertex v : outside) {
                if (v <= u) continue;
                if (resolves_pair(s.distances, t, u, v)) continue;
                if (component[static_cast<std::size_t>(u)] == component[static_cast<std::size_t>(v)]) {
                    failure = failed(id, "tied pair inside one component of G - T", {u, v}, {t});
                    return false;
                }
            }
        return true;
    });
    if (failure) return *failure;
    if (separating == 0) return vacuous(id, "no separating set of size k-1");
    return verdict(id);
}

TheoremVerdict check_max_degree_lower(const Subject& s) {
    constexpr auto id = TheoremId::max_degree_lower;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (k_of(s) < 2) return vacuous(id, "k < 2");
    if (s.summary.max_degree < k_of(s))
        return failed(id, "Delta=" + num(s.summary.max_degree) + " < k=" + num(k_of(s)));
    return verdict(id);
}

TheoremVerdict check_nonadjacent_degree_sum(const Subject& s) {
    constexpr auto id = TheoremId::nonadjacent_degree_sum;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (is_complete(s.graph)) return vacuous(id, "no non-adjacent pairs");
    const int k = k_of(s);
    for (Vertex u = 0; u < s.graph.order(); ++u)
        for (Vertex v = u + 1; v < s.graph.order(); ++v)
            if (!s.graph.adjacent(u, v) && s.graph.degree(u) + s.graph.degree(v) < k)
                return failed(id, "deg sum " + num(s.graph.degree(u) + s.graph.degree(v)) + " < k=" + num(k), {u, v});
    return verdict(id);
}

TheoremVerdict check_clique_bound(const Subject& s) {
    constexpr auto id = TheoremId::clique_bound;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (s.graph.order() < 2) return vacuous(id, "order < 2");
    const int omega = s.summary.clique_number;
    const int k = k_of(s);
    if (omega > k + 1) return failed(id, "omega=" + num(omega) + " > k+1=" + num(k + 1));
    const bool complete = is_complete(s.graph);
    if ((omega == k + 1) != complete)
        return failed(id, "omega=" + num(omega) + ", k+1=" + num(k + 1) + ", complete=" + (complete ? "yes" : "no"));
    return verdict(id);
}

TheoremVerdict check_common_neighbors(const Subject& s) {
    constexpr auto id = TheoremId::common_neighbors;
    if (s.graph.order() < 2) return vacuous(id, "no vertex pairs");
    const int res = s.report.res;
    for (Vertex u = 0; u < s.graph.order(); ++u)
        for (Vertex v = u + 1; v < s.graph.order(); ++v) {
            VertexSet common = s.graph.neighbors(u) & s.graph.neighbors(v);
            if (common.size() > res - 1)
                return failed(id, num(common.size()) + " common neighbours > res-1=" + num(res - 1), {u, v}, {common});
        }
    return verdict(id);
}

TheoremVerdict check_max_degree_upper(const Subject& s) {
    constexpr auto id = TheoremId::max_degree_upper;
    if (!randomly(s)) return vacuous(id, "not randomly k-dimensional");
    if (is_complete(s.graph)) return vacuous(id, "graph is complete");
    const int n = s.graph.order();
    for (Vertex v = 0; v < n; ++v)
        if (s.graph.degree(v) > n - 2) return failed(id, "dominating vertex", {v});
    return verdict(id);
}

TheoremVerdict check_randomly_2_characterization(const Subject& s) {
    constexpr auto id = TheoremId::randomly_2_characterization;
    const bool r2 = randomly(s) && k_of(s) == 2;
    const bool odd_cycle = is_cycle(s.graph) && s.graph.order() % 2 == 1;
    if (r2 != odd_cycle)
        return failed(id, std::string("randomly 2-dimensional=") + (r2 ? "yes" : "no") +
                              ", odd cycle=" + (odd_cycle ? "yes" : "no"));
    return verdict(id);
}

TheoremVerdict check(TheoremId id, const Subject& s) {
    switch (id) {
    case TheoremId::extremal_dimension: return check_extremal_dimension(s);
    case TheoremId::twin_observation: return check_twin_observation(s);
    case TheoremId::res_extremes: return check_res_extremes(s);
    case TheoremId::twin_free: return check_twin_free(s);
    case TheoremId::min_degree: return check_min_degree(s);
    case TheoremId::two_connected: return check_two_connected(s);
    case TheoremId::no_adjacent_degree_two: return check_no_adjacent_degree_two(s);
    case TheoremId::separating_set_structure: return check_separating_set_structure(s);
    case TheoremId::max_degree_lower: return check_max_degree_lower(s);
    case TheoremId::nonadjacent_degree_sum: return check_nonadjacent_degree_sum(s);
    case TheoremId::clique_bound: return check_clique_bound(s);
    case TheoremId::common_neighbors: return check_common_neighbors(s);
    case TheoremId::max_degree_upper: return check_max_degree_upper(s);
    case TheoremId::randomly_2_characterization: return check_randomly_2_characterization(s);
    }
    throw Error(ErrorKind::BadParams, "unknown theorem");
}

std::vector<TheoremVerdict> check_all(const Subject& s, std::uint64_t graph_index, const std::string& graph_id) {
    std::vector<TheoremVerdict> out;
    out.reserve(all_theorems.size());
    for (TheoremId id : all_theorems) {
        auto start = std::chrono::steady_clock::now();
        TheoremVerdict v = check(id, s);
        v.elapsed = std::chrono::steady_clock::now() - start;
        v.graph_index = graph_index;
        v.graph_id = graph_id;
        out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t SuiteResult::failures() const noexcept {
    std::uint64_t f = 0;
    for (const auto& t : tallies) f += t.fail;
    return f;
}

SuiteResult run_suite(GraphStream& corpus, const SuiteOptions& opts) {
    struct Checked {
        bool connected = true;
        std::vector<TheoremVerdict> verdicts;
    };
    SuiteResult result;
    const unsigned jobs = resolve_jobs(opts.jobs);
    std::vector<GraphRecord> batch;
    std::vector<Checked> checked;
    for (;;) {
        batch.clear();
        while (batch.size() < opts.batch_size) {
            auto rec = corpus.next();
            if (!rec) break;
            batch.push_back(std::move(*rec));
        }
        if (batch.empty()) break;

        parallel_map(batch, checked, jobs, [&](const GraphRecord& rec) {
            Checked c;
            if (rec.graph.order() == 0 || !is_connected(rec.graph)) {
                c.connected = false;
                return c;
            }
            c.verdicts = check_all(make_subject(rec.graph, opts.solver), rec.index, rec.id);
            return c;
        });

        bool any_failure = false;
        for (auto& c : checked) {
            if (!c.connected) {
                ++result.skipped_disconnected;
                continue;
            }
            ++result.graphs_checked;
            for (auto& v : c.verdicts) {
                auto& tally = result.tallies[static_cast<std::size_t>(v.theorem)];
                tally.elapsed += v.elapsed;
                switch (v.outcome) {
                case Outcome::pass: ++tally.pass; break;
                case Outcome::vacuous: ++tally.vacuous; break;
                case Outcome::fail: ++tally.fail; any_failure = true; break;
                }
                if (opts.keep_all_verdicts || v.outcome == Outcome::fail) result.verdicts.push_back(std::move(v));
            }
        }
        if (any_failure && opts.stop_on_failure) {
            result.stopped_early = true;
            break;
        }
    }
    return result;
}

} // namespace resolvent

#pragma once

#include "resolvent/corpus.hpp"
#include "resolvent/graph.hpp"
#include "resolvent/metric.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resolvent {

/// One executable predicate per structural fact about randomly
/// k-dimensional graphs and their resolving/metric-dimension relatives.
enum class TheoremId {
    extremal_dimension,          ///< beta = 1 iff path, beta = n-1 iff complete
    twin_observation,            ///< every resolving set meets each twin pair
    res_extremes,                ///< res = 1 iff P_1/P_2, res = n-1 iff twins exist
    twin_free,                   ///< randomly k-dim, not complete => no twins
    min_degree,                  ///< randomly k-dim, k >= 2 => delta >= 2
    two_connected,               ///< randomly k-dim, k >= 2 => no cut vertex
    no_adjacent_degree_two,      ///< randomly k-dim, k >= 4 => no edge between degree-2 vertices
    separating_set_structure,    ///< separating (k-1)-sets split G into exactly two parts
    max_degree_lower,            ///< randomly k-dim, k >= 2 => Delta >= k
    nonadjacent_degree_sum,      ///< randomly k-dim => deg u + deg v >= k for u !~ v
    clique_bound,                ///< randomly k-dim => omega <= k+1, equality iff complete
    common_neighbors,            ///< |N(u) & N(v)| <= res - 1 for every graph
    max_degree_upper,            ///< randomly k-dim, not complete => Delta <= n-2
    randomly_2_characterization, ///< randomly 2-dimensional iff odd cycle
};

inline constexpr std::array all_theorems = {
    TheoremId::extremal_dimension,     TheoremId::twin_observation,
    TheoremId::res_extremes,           TheoremId::twin_free,
    TheoremId::min_degree,             TheoremId::two_connected,
    TheoremId::no_adjacent_degree_two, TheoremId::separating_set_structure,
    TheoremId::max_degree_lower,       TheoremId::nonadjacent_degree_sum,
    TheoremId::clique_bound,           TheoremId::common_neighbors,
    TheoremId::max_degree_upper,       TheoremId::randomly_2_characterization,
};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> theorem_from_string(std::string_view name) noexcept;

enum class Outcome { pass, vacuous, fail };
std::string_view to_string(Outcome o) noexcept;

struct Counterexample {
    std::string detail;
    std::vector<Vertex> vertices;
    std::vector<VertexSet> sets;
};

struct TheoremVerdict {
    TheoremId theorem{};
    std::uint64_t graph_index = 0;
    std::string graph_id;
    Outcome outcome = Outcome::pass;
    std::string vacuity_reason; ///< the hypothesis that failed, when vacuous
    std::optional<Counterexample> counterexample;
    std::chrono::nanoseconds elapsed{0};

    bool holds() const noexcept { return outcome != Outcome::fail; }
};

using Solver = std::function<SolveReport(const Graph&)>;

/// Everything the checks read about one graph, computed once.
struct Subject {
    Graph graph;
    DistanceMatrix distances;
    SolveReport report;
    GraphSummary summary;
};

/// Throws Error{Disconnected}. `solver` defaults to resolvent::solve.
Subject make_subject(Graph g, const Solver& solver = {});

TheoremVerdict check_extremal_dimension(const Subject& s);
TheoremVerdict check_twin_observation(const Subject& s);
TheoremVerdict check_res_extremes(const Subject& s);
TheoremVerdict check_twin_free(const Subject& s);
TheoremVerdict check_min_degree(const Subject& s);
TheoremVerdict check_two_connected(const Subject& s);
TheoremVerdict check_no_adjacent_degree_two(const Subject& s);
TheoremVerdict check_separating_set_structure(const Subject& s);
TheoremVerdict check_max_degree_lower(const Subject& s);
TheoremVerdict check_nonadjacent_degree_sum(const Subject& s);
TheoremVerdict check_clique_bound(const Subject& s);
TheoremVerdict check_common_neighbors(const Subject& s);
TheoremVerdict check_max_degree_upper(const Subject& s);
TheoremVerdict check_randomly_2_characterization(const Subject& s);

TheoremVerdict check(TheoremId id, const Subject& s);

/// Runs every check on one subject, in all_theorems order.
std::vector<TheoremVerdict> check_all(const Subject& s, std::uint64_t graph_index = 0,
                                      const std::string& graph_id = {});

struct TheoremTally {
    std::uint64_t pass = 0;
    std::uint64_t vacuous = 0;
    std::uint64_t fail = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct SuiteOptions {
    unsigned jobs = 1;
    bool keep_all_verdicts = false; ///< otherwise only failures are kept
    bool stop_on_failure = false;   ///< finish the current batch, then stop
    Solver solver;                  ///< empty means resolvent::solve
    std::size_t batch_size = 4096;
};

struct SuiteResult {
    std::vector<TheoremVerdict> verdicts; ///< ordered by graph index, then theorem
    std::array<TheoremTally, all_theorems.size()> tallies{};
    std::uint64_t graphs_checked = 0;
    std::uint64_t skipped_disconnected = 0;
    bool stopped_early = false;

    std::uint64_t failures() const noexcept;
    const TheoremTally& tally(TheoremId id) const noexcept { return tallies[static_cast<std::size_t>(id)]; }
};

/// Applies every check to every connected graph of the stream. Disconnected
/// graphs are counted and skipped. Results do not depend on opts.jobs.
SuiteResult run_suite(GraphStream& corpus, const SuiteOptions& opts = {});

} // namespace resolvent

#include <resolvent/corpus.hpp>
#include <resolvent/error.hpp>
#include <resolvent/invariants.hpp>

#include <doctest.h>

using namespace resolvent;

namespace {

TheoremVerdict run_check(TheoremId id, const std::string& spec) { return check(id, make_subject(generate(spec))); }

std::vector<GraphRecord> records(const std::vector<std::string>& specs) {
    std::vector<GraphRecord> out;
    for (const auto& s : specs) out.push_back({out.size(), s, generate(s), RecordSource::generator});
    return out;
}

// Claims one extra landmark is needed on every path.
SolveReport overcounting_solver(const Graph& g) {
    SolveReport r = solve(g);
    if (is_path(g)) ++r.beta;
    return r;
}

} // namespace

TEST_CASE("theorem names round-trip") {
    for (TheoremId id : all_theorems) CHECK(theorem_from_string(to_string(id)) == id);
    CHECK_FALSE(theorem_from_string("no_such_theorem"));
}

TEST_CASE("individual checks on small fixtures") {
    CHECK(run_check(TheoremId::extremal_dimension, "path:4").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::extremal_dimension, "complete:1").outcome == Outcome::pass);

    CHECK(run_check(TheoremId::twin_observation, "cycle:5").outcome == Outcome::vacuous);
    CHECK(run_check(TheoremId::twin_observation, "star:4").outcome == Outcome::pass);

    CHECK(run_check(TheoremId::res_extremes, "complete:5").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::res_extremes, "path:2").outcome == Outcome::pass);

    auto tf = run_check(TheoremId::twin_free, "cycle:5");
    CHECK(tf.outcome == Outcome::pass);
    auto tf_k = run_check(TheoremId::twin_free, "complete:4");
    CHECK(tf_k.outcome == Outcome::vacuous);
    CHECK(tf_k.vacuity_reason == "graph is complete");

    auto md = run_check(TheoremId::min_degree, "path:4");
    CHECK(md.outcome == Outcome::vacuous);
    CHECK(md.vacuity_reason == "not randomly k-dimensional");
    CHECK(run_check(TheoremId::min_degree, "cycle:7").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::min_degree, "complete:2").outcome == Outcome::vacuous);

    CHECK(run_check(TheoremId::two_connected, "complete:4").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::two_connected, "cycle:5").outcome == Outcome::pass);

    CHECK(run_check(TheoremId::no_adjacent_degree_two, "complete:5").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::no_adjacent_degree_two, "cycle:5").vacuity_reason == "k < 4");

    auto sep = run_check(TheoremId::separating_set_structure, "cycle:5");
    CHECK(sep.outcome == Outcome::vacuous);
    CHECK(sep.vacuity_reason == "no separating set of size k-1");
    CHECK(run_check(TheoremId::separating_set_structure, "complete:4").outcome == Outcome::vacuous);

    CHECK(run_check(TheoremId::max_degree_lower, "cycle:9").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::nonadjacent_degree_sum, "cycle:5").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::nonadjacent_degree_sum, "complete:3").outcome == Outcome::vacuous);
    CHECK(run_check(TheoremId::clique_bound, "complete:6").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::clique_bound, "cycle:5").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::common_neighbors, "petersen").outcome == Outcome::pass);
    CHECK(run_check(TheoremId::common_neighbors, "complete:1").outcome == Outcome::vacuous);
    CHECK(run_check(TheoremId::max_degree_upper, "cycle:7").outcome == Outcome::pass);

    for (const char* spec : {"cycle:3", "cycle:5", "cycle:6", "path:3", "complete:4", "petersen"})
        CHECK(run_check(TheoremId::randomly_2_characterization, spec).outcome == Outcome::pass);
}

TEST_CASE("checks report counterexamples on inconsistent subjects") {
    SUBCASE("low degree vertex") {
        Subject s = make_subject(generate("path:4"));
        s.report.is_randomly_k = true;
        s.report.k = 2;
        auto v = check_min_degree(s);
        CHECK(v.outcome == Outcome::fail);
        REQUIRE(v.counterexample);
        CHECK(v.counterexample->vertices == std::vector<Vertex>{0});
    }
    SUBCASE("cut vertex") {
        Subject s = make_subject(generate("star:3"));
        s.report.is_randomly_k = true;
        s.report.k = 2;
        auto v = check_two_connected(s);
        CHECK(v.outcome == Outcome::fail);
        REQUIRE(v.counterexample);
        CHECK(v.counterexample->sets == std::vector<VertexSet>{VertexSet{0}});
    }
    SUBCASE("wrong dimension") {
        Subject s = make_subject(generate("path:5"));
        s.report.beta = 2;
        CHECK(check_extremal_dimension(s).outcome == Outcome::fail);
    }
    SUBCASE("oversized common neighbourhood") {
        Subject s = make_subject(generate("complete:5"));
        s.report.res = 2;
        auto v = check_common_neighbors(s);
        CHECK(v.outcome == Outcome::fail);
        REQUIRE(v.counterexample);
        CHECK(v.counterexample->vertices.size() == 2);
    }
}

TEST_CASE("make_subject rejects disconnected graphs") {
    CHECK_THROWS_AS(make_subject(build_graph(3, {{0, 1}})), Error);
}

TEST_CASE("suite over paths") {
    auto stream = from_records(records({"path:1", "path:2", "path:3", "path:4", "path:5", "path:6", "path:7"}));
    SuiteOptions opts;
    opts.keep_all_verdicts = true;
    auto result = run_suite(*stream, opts);
    CHECK(result.graphs_checked == 7);
    CHECK(result.failures() == 0);
    CHECK(result.verdicts.size() == 7 * all_theorems.size());
    CHECK(result.tally(TheoremId::extremal_dimension).pass == 7);
    // Only P_1 and P_2 are randomly k-dimensional.
    CHECK(result.tally(TheoremId::min_degree).vacuous == 7);
}

TEST_CASE("suite over every connected graph of order five") {
    auto stream = enumerate_connected(5);
    auto result = run_suite(*stream);
    CHECK(result.graphs_checked == 728);
    CHECK(result.failures() == 0);
    CHECK(result.verdicts.empty());
    for (TheoremId id : all_theorems) {
        const auto& t = result.tally(id);
        CHECK(t.pass + t.vacuous == 728);
    }
}

TEST_CASE("empty corpus and disconnected inputs") {
    auto empty = from_records({});
    auto r = run_suite(*empty);
    CHECK(r.graphs_checked == 0);
    CHECK(r.failures() == 0);

    std::vector<GraphRecord> recs = records({"cycle:5"});
    recs.push_back({1, "A?", parse_graph6("A?"), RecordSource::file});
    auto mixed = from_records(std::move(recs));
    auto m = run_suite(*mixed);
    CHECK(m.graphs_checked == 1);
    CHECK(m.skipped_disconnected == 1);
}

TEST_CASE("results do not depend on the job count") {
    auto run = [](unsigned jobs) {
        auto stream = enumerate_connected_range(1, 5);
        SuiteOptions opts;
        opts.jobs = jobs;
        opts.keep_all_verdicts = true;
        opts.batch_size = 97;
        return run_suite(*stream, opts);
    };
    auto one = run(1), four = run(4);
    REQUIRE(one.verdicts.size() == four.verdicts.size());
    for (std::size_t i = 0; i < one.verdicts.size(); ++i) {
        REQUIRE(one.verdicts[i].graph_index == four.verdicts[i].graph_index);
        REQUIRE(one.verdicts[i].theorem == four.verdicts[i].theorem);
        REQUIRE(one.verdicts[i].outcome == four.verdicts[i].outcome);
        REQUIRE(one.verdicts[i].vacuity_reason == four.verdicts[i].vacuity_reason);
    }
    for (TheoremId id : all_theorems) {
        CHECK(one.tally(id).pass == four.tally(id).pass);
        CHECK(one.tally(id).vacuous == four.tally(id).vacuous);
    }
}

TEST_CASE("a broken solver is caught and its counterexample reproduces") {
    auto stream = enumerate_connected_range(1, 5);
    SuiteOptions opts;
    opts.solver = overcounting_solver;
    auto result = run_suite(*stream, opts);
    REQUIRE(result.failures() > 0);
    const TheoremVerdict& first = result.verdicts.front();
    CHECK(first.theorem == TheoremId::extremal_dimension);
    CHECK(first.outcome == Outcome::fail);
    REQUIRE(first.counterexample);

    // Re-running that single graph and theorem gives the same verdict with
    // the broken solver, and a pass with the real one.
    Graph g = parse_graph6(first.graph_id);
    CHECK(check(first.theorem, make_subject(g, overcounting_solver)).outcome == Outcome::fail);
    CHECK(check(first.theorem, make_subject(g)).outcome == Outcome::pass);

    SUBCASE("stop on failure") {
        auto again = enumerate_connected_range(1, 6);
        opts.stop_on_failure = true;
        opts.batch_size = 64;
        auto stopped = run_suite(*again, opts);
        CHECK(stopped.stopped_early);
        CHECK(stopped.graphs_checked < 728 + 38 + 4 + 1 + 1 + 26704);
        CHECK(stopped.failures() > 0);
    }
}

#include "oracles.hpp"

#include <resolvent/corpus.hpp>
#include <resolvent/error.hpp>

#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

using namespace resolvent;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected resolvent::Error");
    return ErrorKind::ParseError;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, sep);) out.push_back(tok);
    return out;
}

std::vector<Edge> parse_pairs(const std::string& s) {
    std::vector<Edge> out;
    for (const auto& tok : split(s, ' ')) {
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        out.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> out;
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::ifstream data(const std::string& name) {
    std::ifstream in(std::string(RESOLVENT_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in);
    return in;
}

} // namespace

TEST_CASE("graph6 decode") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edges() == std::vector<Edge>{{0, 1}});
    CHECK(parse_graph6("A?").edge_count() == 0);
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6(">>graph6<<A_\r\n").edge_count() == 1);
    CHECK(parse_graph6("IheA@GUAo") == generate("petersen"));
}

TEST_CASE("graph6 encode") {
    CHECK(emit_graph6(generate("complete:2")) == "A_");
    CHECK(emit_graph6(build_graph(1, {})) == "@");
    CHECK(emit_graph6(generate("petersen")) == "IheA@GUAo");
    CHECK(kind_of([] { emit_graph6(generate("path:63")); }) == ErrorKind::UnsupportedSize);
    CHECK_NOTHROW(emit_graph6(generate("path:62")));
}

TEST_CASE("graph6 errors") {
    CHECK(kind_of([] { parse_graph6(""); }) == ErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse_graph6(" A"); }) == ErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse_graph6("~?@?"); }) == ErrorKind::UnsupportedSize);
    CHECK(kind_of([] { parse_graph6("D?"); }) == ErrorKind::TruncatedPayload);
    CHECK(kind_of([] { parse_graph6("A_?"); }) == ErrorKind::TrailingBits);
    CHECK(kind_of([] { parse_graph6("A`"); }) == ErrorKind::TrailingBits); // padding bit set
    CHECK(kind_of([] { parse_graph6("B "); }) == ErrorKind::ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) edges.emplace_back(u, v);
        Graph g = build_graph(n, edges);
        const std::string s = emit_graph6(g);
        REQUIRE(s.size() == 1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
        REQUIRE(parse_graph6(s) == g);
        REQUIRE(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("graph6 agrees with networkx-produced files") {
    for (const char* name : {"networkx_connected_n5", "networkx_random"}) {
        CAPTURE(name);
        auto g6 = data(std::string(name) + ".g6");
        auto edges = data(std::string(name) + ".edges");
        std::string code, line;
        int count = 0;
        while (std::getline(g6, code)) {
            REQUIRE(std::getline(edges, line));
            auto fields = split(line, '\t');
            REQUIRE(fields.front() == code);
            Graph g = parse_graph6(code);
            REQUIRE(emit_graph6(g) == code);
            // Random file lines are "code<TAB>n<TAB>edges", the other "code<TAB>edges".
            const bool with_order = std::string(name) == "networkx_random";
            const std::size_t edge_field = with_order ? 2 : 1;
            REQUIRE(g.edges() == parse_pairs(fields.size() > edge_field ? fields[edge_field] : ""));
            if (with_order) REQUIRE(g.order() == std::stoi(fields[1]));
            ++count;
        }
        CHECK(count > 20);
    }
}

TEST_CASE("edge lists") {
    Graph g = parse_edge_list("# triangle\n3\n0 1\n\n1 2\n# closing edge\n2 0\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(parse_edge_list("1\n").order() == 1);
    CHECK(kind_of([] { parse_edge_list("3\n0 3"); }) == ErrorKind::VertexOutOfRange);
    CHECK(kind_of([] { parse_edge_list("3\n1 1"); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { parse_edge_list("3\n0 x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_edge_list("3\n0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_edge_list(""); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_edge_list("70\n"); }) == ErrorKind::CapacityExceeded);
}

TEST_CASE("generators") {
    CHECK(generate("path:5").edge_count() == 4);
    CHECK(degree_sequence(generate("path:5")) == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(degree_sequence(generate("cycle:6")) == std::vector<int>(6, 2));
    CHECK(degree_sequence(generate("complete:5")) == std::vector<int>(5, 4));
    CHECK(degree_sequence(generate("complete_bipartite:2:3")) == std::vector<int>{2, 2, 2, 3, 3});
    CHECK(degree_sequence(generate("star:4")) == std::vector<int>{1, 1, 1, 1, 4});
    CHECK(generate("star:4").order() == 5);
    Graph p = generate("petersen");
    CHECK(p.order() == 10);
    CHECK(degree_sequence(p) == std::vector<int>(10, 3));
    CHECK(all_pairs_distances(p).diameter() == 2);
    CHECK(generate("path", {"3"}) == generate("path:3"));

    CHECK(kind_of([] { generate("cycle:2"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("path:0"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("path:x"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("path"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("path:3:4"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("wheel:5"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("complete:65"); }) == ErrorKind::CapacityExceeded);
}

TEST_CASE("random generator") {
    CHECK(generate("random:12:0.3:42") == generate("random:12:0.3:seed42"));
    CHECK(generate("random:12:0.3:42") == generate("random:12:0.3:42"));
    CHECK_FALSE(generate("random:12:0.3:42") == generate("random:12:0.3:43"));
    CHECK(is_connected(generate("random:20:0.1:1")));
    CHECK(generate("random:6:1:0") == generate("complete:6"));
    CHECK(kind_of([] { generate("random:5:0:1"); }) == ErrorKind::ConnectivityRetryExhausted);
    CHECK(generate("random:1:0:1").order() == 1);
    CHECK(kind_of([] { generate("random:5:1.5:1"); }) == ErrorKind::BadParams);
    CHECK(kind_of([] { generate("random:5:0.5:abc"); }) == ErrorKind::BadParams);
}

TEST_CASE("exhaustive enumeration matches the inclusion-exclusion count") {
    for (int n = 1; n <= 7; ++n) {
        CAPTURE(n);
        auto stream = enumerate_connected(n);
        std::uint64_t count = 0, last_index = 0;
        bool all_connected = true;
        while (auto rec = stream->next()) {
            if (count > 0) REQUIRE(rec->index == last_index + 1);
            last_index = rec->index;
            ++count;
            if (n <= 5) {
                all_connected = all_connected && is_connected(rec->graph);
                REQUIRE(rec->id == emit_graph6(rec->graph));
                REQUIRE(rec->source == RecordSource::enumeration);
            }
        }
        CHECK(all_connected);
        CHECK(count == oracle::connected_labeled_count(n));
    }
    CHECK(oracle::connected_labeled_count(3) == 4);
    CHECK(oracle::connected_labeled_count(4) == 38);
    CHECK(oracle::connected_labeled_count(7) == 1866256);
}

TEST_CASE("enumeration bounds and ranges") {
    CHECK(kind_of([] { enumerate_connected(8); }) == ErrorKind::UnsupportedSize);
    CHECK(kind_of([] { enumerate_connected(0); }) == ErrorKind::UnsupportedSize);
    auto range = enumerate_connected_range(3, 4);
    std::uint64_t count = 0;
    std::map<int, int> by_order;
    while (auto rec = range->next()) {
        REQUIRE(rec->index == count);
        ++count;
        ++by_order[rec->graph.order()];
    }
    CHECK(count == 42);
    CHECK(by_order[3] == 4);
    CHECK(by_order[4] == 38);
}

TEST_CASE("graph6 line streams") {
    std::istringstream in(">>graph6<<A_\n\nBw\n");
    auto stream = graph6_lines(in);
    auto a = stream->next();
    REQUIRE(a);
    CHECK(a->id == "A_");
    CHECK(a->source == RecordSource::file);
    auto b = stream->next();
    REQUIRE(b);
    CHECK(b->graph == generate("complete:3"));
    CHECK(b->index == 1);
    CHECK_FALSE(stream->next());

    std::istringstream bad("A_\nD?\n");
    auto s2 = graph6_lines(bad);
    CHECK(s2->next());
    try {
        s2->next();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncatedPayload);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

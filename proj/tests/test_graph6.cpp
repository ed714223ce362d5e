#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "cyclex/canonical.hpp"
#include "cyclex/graph6.hpp"
#include "test_support.hpp"

using namespace cyclex;
namespace ts = testsupport;

TEST_CASE("Bw is the triangle, bit-exact both ways") {
    const Graph g = parse_graph6("Bw");
    CHECK(g == ts::complete(3));
    CHECK(write_graph6(ts::complete(3)) == "Bw");
}

TEST_CASE("Dhc is the 5-cycle 0-1-2-3-4-0, bit-exact both ways") {
    const Graph g = parse_graph6("Dhc");
    CHECK(g == ts::cycle(5));
    CHECK(write_graph6(ts::cycle(5)) == "Dhc");
}

TEST_CASE("catalog encodings") {
    CHECK(write_graph6(ts::k113()) == "D}o");
    CHECK(write_graph6(ts::xgraph()) == "F~qc_");
    CHECK(parse_graph6("D}o") == ts::k113());
}

TEST_CASE("header and CR tolerated") {
    CHECK(parse_graph6(">>graph6<<Bw") == ts::complete(3));
    CHECK(parse_graph6("Bw\r") == ts::complete(3));
}

TEST_CASE("malformed records rejected") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);        // truncated data
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);      // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x1f"), Graph6Error);    // non-printable
    CHECK_THROWS_AS(parse_graph6("Bx"), Graph6Error);       // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~~?@?"), Graph6Error);    // oversized long form
}

TEST_CASE("long-form order bytes cover the 63..64 capacity") {
    for (int n : {63, 64}) {
        Graph g(n);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
        const Graph path_n(n, std::span<const std::pair<int, int>>(edges));
        const std::string line = write_graph6(path_n);
        CHECK(line[0] == 126);
        CHECK(parse_graph6(line) == path_n);
    }
    // order 65 exceeds capacity: '~' prefix with n=65
    std::string too_big = "~";
    too_big += static_cast<char>(63);
    too_big += static_cast<char>(64);
    too_big += static_cast<char>(63 + 1);
    CHECK_THROWS_AS(parse_graph6(too_big), Graph6Error);
}

TEST_CASE("write then parse is the identity on random graphs") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = ts::random_graph(n, 0.4, rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("parse then write is the identity on enumerated lines") {
    for (const Graph& g : enumerate_graphs(5, false)) {
        const std::string line = write_graph6(g);
        CHECK(write_graph6(parse_graph6(line)) == line);
    }
}

TEST_CASE("random printable garbage parses or fails cleanly") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> len(0, 24);
    std::uniform_int_distribution<int> byte(32, 126);
    for (int iter = 0; iter < 3000; ++iter) {
        std::string line;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) line.push_back(static_cast<char>(byte(rng)));
        try {
            const Graph g = parse_graph6(line);
            CHECK(write_graph6(g) == line);  // anything accepted must be canonical
        } catch (const Graph6Error&) {
            // rejection is fine; anything else would escape the CHECK_THROWS
        }
    }
}

TEST_CASE("graph6 file round trip with header and CRLF") {
    const char* path = "cyclex_test_corpus.g6";
    {
        std::ofstream out(path, std::ios::binary);
        out << ">>graph6<<\r\n";
        out << "Bw\r\n";
        out << "\n";
        out << "Dhc\n";
    }
    const auto graphs = read_graph6_file(path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == ts::complete(3));
    CHECK(graphs[1] == ts::cycle(5));
    std::remove(path);

    CHECK_THROWS_AS(read_graph6_file("does_not_exist.g6"), Graph6Error);
}

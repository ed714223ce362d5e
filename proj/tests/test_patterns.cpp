#include <doctest.h>

#include "cyclex/canonical.hpp"
#include "cyclex/patterns.hpp"
#include "test_support.hpp"

using namespace cyclex;
namespace ts = testsupport;

TEST_CASE("union_of") {
    const Graph g = union_of(ts::complete(1), ts::complete(2));
    CHECK(g.order() == 3);
    CHECK(g.size() == 1);

    const Graph h = union_of(ts::complete(1), ts::path(3));
    CHECK(h.order() == 4);
    CHECK(h.size() == 2);

    const Graph two_triangles = union_of(ts::cycle(3), ts::cycle(3));
    CHECK(two_triangles.order() == 6);
    CHECK(two_triangles.size() == 6);
    CHECK_FALSE(is_connected(two_triangles));

    CHECK_THROWS_AS(union_of(Graph(40), Graph(40)), std::invalid_argument);
}

TEST_CASE("join_of") {
    const Graph star = join_of(ts::complete(1), Graph(3));
    CHECK(canonical_certificate(star) == canonical_certificate(ts::claw()));

    const Graph pw = join_of(ts::complete(1), union_of(ts::complete(1), ts::complete(2)));
    CHECK(pw.order() == 4);
    CHECK(pw.size() == 4);

    const Graph k113 = join_of(ts::complete(1), join_of(ts::complete(1), Graph(3)));
    CHECK(k113.order() == 5);
    CHECK(k113.size() == 7);
}

TEST_CASE("join edge count identity over catalog pairs") {
    std::vector<Graph> pats;
    for (PatternId id : catalog_patterns()) pats.push_back(named_graph(id));
    for (const Graph& a : pats)
        for (const Graph& b : pats) {
            if (a.order() + b.order() > kMaxOrder) continue;
            CHECK(join_of(a, b).size() == a.size() + b.size() + a.order() * b.order());
        }
}

TEST_CASE("complement_of") {
    CHECK(complement_of(Graph(3)) == ts::complete(3));
    const Graph c5 = ts::cycle(5);
    CHECK(canonical_certificate(complement_of(c5)) == canonical_certificate(c5));
    CHECK(complement_of(complement_of(ts::paw())) == ts::paw());
}

TEST_CASE("named_graph parameter validation") {
    CHECK_THROWS_AS(named_graph(PatternId::cycle(2)), std::invalid_argument);
    CHECK_THROWS_AS(named_graph(PatternId::complete(0)), std::invalid_argument);
    CHECK_THROWS_AS(named_graph(PatternId::star(0)), std::invalid_argument);
    CHECK_NOTHROW(named_graph(PatternId::star(1)));
    CHECK_NOTHROW(named_graph(PatternId::path(1)));
}

TEST_CASE("the X graph matches its fixed labeling") {
    const Graph x = ts::xgraph();
    CHECK(x.order() == 7);
    CHECK(x.size() == 12);
    CHECK(degree_profile(x).sequence == std::vector<int>{6, 4, 4, 4, 2, 2, 2});
    // apex 0 universal; triangle 1,2,3; pendant i+3 hangs off i
    for (int v = 1; v < 7; ++v) CHECK(x.has_edge(0, v));
    CHECK(x.has_edge(1, 2));
    CHECK(x.has_edge(2, 3));
    CHECK(x.has_edge(1, 3));
    CHECK(x.has_edge(1, 4));
    CHECK(x.has_edge(2, 5));
    CHECK(x.has_edge(3, 6));
    CHECK_FALSE(x.has_edge(4, 5));
}

TEST_CASE("claw equals the 4-star; K113 matches its join form") {
    CHECK(ts::claw() == named_graph(PatternId::star(4)));
    CHECK(canonical_certificate(ts::k113()) ==
          canonical_certificate(join_of(ts::complete(1), join_of(ts::complete(1), Graph(3)))));
}

TEST_CASE("union and join commute up to isomorphism") {
    std::vector<Graph> pats;
    for (PatternId id : catalog_patterns())
        if (named_graph(id).order() <= 5) pats.push_back(named_graph(id));
    for (const Graph& a : pats)
        for (const Graph& b : pats) {
            CHECK(canonical_certificate(union_of(a, b)) == canonical_certificate(union_of(b, a)));
            CHECK(canonical_certificate(join_of(a, b)) == canonical_certificate(join_of(b, a)));
        }
}

TEST_CASE("pattern names are unique") {
    std::vector<std::string> names;
    for (PatternId id : catalog_patterns()) names.push_back(pattern_name(id));
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

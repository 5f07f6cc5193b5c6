#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/ladder_graph.hpp"

using namespace ringlad;

TEST_CASE("small Ringel ladders") {
    LadderGraph g2 = build_ringel(2);
    CHECK(g2.vertex_count() == 4);
    CHECK(g2.edge_count() == 6);
    CHECK(g2.betti() == 3);

    LadderGraph g5 = build_ringel(5);  // R_4
    CHECK(g5.vertex_count() == 10);
    CHECK(g5.edge_count() == 15);
    CHECK(g5.betti() == 6);
}

TEST_CASE("invariants hold across the range") {
    for (int n = 2; n <= 20; ++n) {
        LadderGraph g = build_ringel(n);
        CHECK_NOTHROW(g.validate());
        CHECK(g.is_cubic());
        CHECK(g.betti() == n + 1);
    }
}

TEST_CASE("cotree order is deterministic and starts with e") {
    LadderGraph a = build_ringel(7);
    LadderGraph b = build_ringel(7);
    CHECK(a.cotree == b.cotree);
    CHECK(a.edges[static_cast<size_t>(a.cotree[0])].label == "e");
    for (int i = 1; i <= 7; ++i)
        CHECK(a.edges[static_cast<size_t>(a.cotree[static_cast<size_t>(i)])].label == "a" + std::to_string(i));
}

TEST_CASE("parameter guards") {
    CHECK_THROWS_AS(build_ringel(1), std::invalid_argument);
    CHECK_THROWS_AS(build_ringel(0), std::invalid_argument);
    CHECK_THROWS_AS(build_closed_end(0), std::invalid_argument);
}

TEST_CASE("closed-end ladders") {
    LadderGraph l4 = build_closed_end(4);
    CHECK(l4.vertex_count() == 8);
    CHECK(l4.edge_count() == 12);
    CHECK(l4.betti() == 5);

    LadderGraph l1 = build_closed_end(1);
    CHECK(l1.vertex_count() == 2);
    CHECK(l1.edge_count() == 3);
    CHECK(l1.betti() == 2);

    CHECK(build_closed_end(2).betti() == 3);
    for (int k = 1; k <= 12; ++k) CHECK_NOTHROW(build_closed_end(k).validate());
}

TEST_CASE("dart bookkeeping") {
    LadderGraph g = build_ringel(3);
    for (int d = 0; d < g.dart_count(); ++d) {
        CHECK(g.dart_tail(LadderGraph::dart_reverse(d)) == g.dart_head(d));
        CHECK(g.dart_edge(d) == d / 2);
    }
}

TEST_CASE("dot export carries the labels and the tree") {
    std::string dot = build_ringel(2).dot();
    CHECK(dot.find("graph R1") != std::string::npos);
    CHECK(dot.find("label=\"e\"") != std::string::npos);
    CHECK(dot.find("label=\"a1\"") != std::string::npos);
    CHECK(dot.find("label=\"b1\", style=bold") != std::string::npos);
    CHECK(dot.find("label=\"c2\", style=bold") != std::string::npos);
    // deterministic output
    CHECK(build_ringel(4).dot() == build_ringel(4).dot());
    CHECK(build_closed_end(3).dot().find("graph L3") != std::string::npos);
}

#include <doctest.h>

#include <random>

#include "graphcone/cone.hpp"
#include "graphcone/enumerate.hpp"
#include "graphcone/networks.hpp"

#include "fixtures.hpp"

using namespace graphcone;
using graphcone::testing::fixture;

namespace {

ConeElement elt(const TrivalentGraph& g, const std::string& text) {
    return parse_element(g, text);
}

} // namespace

TEST_CASE("element text form round-trips") {
    TrivalentGraph lm = fixture("littleman");
    ConeElement w = elt(lm, "deg=2;loop=1,bar=2,p3=2");
    CHECK(w.degree == 2);
    CHECK(w.coeffs[lm.require_edge("loop")] == 1);
    CHECK(w.coeffs[lm.require_edge("p4")] == 0);
    CHECK(format_element(lm, w) == "deg=2;bar=2,loop=1,p3=2");
    CHECK(parse_element(lm, format_element(lm, w)) == w);
    CHECK(format_element(lm, zero_element(lm)) == "deg=0;");
    CHECK_THROWS_AS(elt(lm, "deg=1;nosuch=1"), DomainError);
    CHECK_THROWS_AS(elt(lm, "loop=1"), ParseError);
}

TEST_CASE("deg_v counts loops twice") {
    TrivalentGraph lm = fixture("littleman");
    ConeElement w = elt(lm, "deg=2;loop=1,bar=2,p3=1,p4=1");
    CHECK(deg_v(lm, w, lm.vertex_index("u")).twice == 4); // (1+1+2)/2 = 2
    CHECK(deg_v(lm, w, lm.vertex_index("w")).twice == 4);
    CHECK(deg_v(lm, zero_element(lm), lm.vertex_index("u")).twice == 0);
    CHECK_THROWS_AS(deg_v(lm, w, lm.vertex_index("a")), DomainError);

    TrivalentGraph db = fixture("dumbbell");
    ConeElement d = elt(db, "deg=1;loopL=1,loopR=1");
    CHECK(deg_v(db, d, db.vertex_index("u")).whole() == 1);
    CHECK(deg_v(db, d, db.vertex_index("w")).whole() == 1);
}

TEST_CASE("deg_min") {
    TrivalentGraph lm = fixture("littleman");
    CHECK(deg_min(lm, elt(lm, "deg=1;p3=1,p4=1")) == 1); // deg_w = 1, deg_u = 0
    CHECK(deg_min(lm, zero_element(lm)) == 0);

    TrivalentGraph hex = fixture("hexagon");
    ConeElement twice_cycle = elt(hex, "deg=2;c1=2,c2=2,c3=2,c4=2,c5=2,c6=2");
    CHECK(deg_min(hex, twice_cycle) == 2);

    CHECK(deg_min(TrivalentGraph{}, ConeElement{}) == 0);
}

TEST_CASE("in_cone and violation reports") {
    TrivalentGraph lm = fixture("littleman");
    CHECK(in_cone(lm, elt(lm, "deg=2;loop=1,bar=2,p3=2,p4=0")));
    CHECK(in_cone(lm, zero_element(lm)));

    ConeCheck parity = in_cone_check(lm, elt(lm, "deg=1;loop=1,bar=1"));
    CHECK_FALSE(parity.ok);
    CHECK(parity.report == "parity fails at vertex u");

    ConeCheck tri = in_cone_check(lm, elt(lm, "deg=2;bar=2"));
    CHECK_FALSE(tri.ok);
    CHECK(tri.report.find("triangle") != std::string::npos);

    ConeCheck deg = in_cone_check(lm, elt(lm, "deg=1;loop=1,bar=2,p3=1,p4=1"));
    CHECK_FALSE(deg.ok);
    CHECK(deg.report.find("minimal degree") != std::string::npos);

    ConeCheck neg = in_cone_check(lm, elt(lm, "deg=1;loop=-1"));
    CHECK_FALSE(neg.ok);
    CHECK(neg.report.find("negative") != std::string::npos);
}

TEST_CASE("local paths on the tripod") {
    TrivalentGraph t = fixture("tripod");
    int c = t.vertex_index("c");
    LocalTriple l = local_paths(t, elt(t, "deg=1;e1=1,e2=1"), c);
    CHECK(l.x == 0);
    CHECK(l.y == 0);
    CHECK(l.z == 1);
    l = local_paths(t, elt(t, "deg=2;e1=2,e2=2,e3=2"), c);
    CHECK((l.x == 1 && l.y == 1 && l.z == 1));
    CHECK(l.a == l.y + l.z);
    CHECK(l.b == l.x + l.z);
    CHECK(l.c == l.x + l.y);
    CHECK_THROWS_AS(local_paths(t, elt(t, "deg=1;e1=1"), c), DomainError);
}

TEST_CASE("networks through a vertex use exactly one local path") {
    TrivalentGraph lm = fixture("littleman");
    for (const Network& n : enumerate_networks(lm)) {
        ConeElement w = network_element(lm, n);
        for (int v : lm.inner_vertices()) {
            LocalTriple l = local_paths(lm, w, v);
            long long through = (l.x > 0) + (l.y > 0) + (l.z > 0);
            CHECK(l.x + l.y + l.z == through); // each used path count is 1
            CHECK(through <= 1);
        }
    }
}

TEST_CASE("lift_cut duplicates the coefficient and preserves membership") {
    TrivalentGraph ham = fixture("hammock");
    ConeElement w = elt(ham, "deg=2;c1=1,c2=1,p2=2");
    LiftResult lifted = lift_cut(ham, w, ham.require_edge("c1"));
    auto names = cut_edge_names(ham, ham.require_edge("c1"));
    CHECK(lifted.element.coeffs[lifted.graph.require_edge(names[0])] == 1);
    CHECK(lifted.element.coeffs[lifted.graph.require_edge(names[1])] == 1);
    CHECK(lifted.element.degree == 2);
    CHECK(in_cone(lifted.graph, lifted.element));
}

TEST_CASE("project splits littleman at the bar") {
    TrivalentGraph lm = fixture("littleman");
    ConeElement w = elt(lm, "deg=1;loop=1,p3=1,p4=1");
    ProjectResult res = project(lm, w, lm.require_edge("bar"));
    CHECK(res.elt1.degree == 1);
    CHECK(res.elt2.degree == 1);
    // The balloon part keeps the loop with value 1 and bar-half 0.
    const TrivalentGraph& bal = res.part1.edge_index("loop") >= 0 ? res.part1 : res.part2;
    const ConeElement& bw = res.part1.edge_index("loop") >= 0 ? res.elt1 : res.elt2;
    CHECK(bw.coeffs[bal.require_edge("loop")] == 1);
    CHECK(in_cone(res.part1, res.elt1));
    CHECK(in_cone(res.part2, res.elt2));

    CHECK_THROWS_AS(project(lm, w, lm.require_edge("loop")), DomainError); // cycle edge
    CHECK_THROWS_AS(project(lm, w, lm.require_edge("p3")), DomainError);   // petiole
}

TEST_CASE("round trip: lift then identify the halves") {
    TrivalentGraph lm = fixture("littleman");
    for (const ConeElement& w : points_of_degree(lm, 2)) {
        LiftResult lifted = lift_cut(lm, w, lm.require_edge("bar"));
        auto names = cut_edge_names(lm, lm.require_edge("bar"));
        ConeElement back = zero_element(lm);
        back.degree = lifted.element.degree;
        for (int e = 0; e < lm.edge_count(); ++e) {
            const std::string& name = lm.edge_name(e);
            back.coeffs[e] = name == "bar"
                                 ? lifted.element.coeffs[lifted.graph.require_edge(names[0])]
                                 : lifted.element.coeffs[lifted.graph.require_edge(name)];
        }
        CHECK(back == w);
    }
}

TEST_CASE("cone points are closed under addition, degrees add") {
    std::mt19937 rng(7);
    for (const char* name : {"littleman", "hammock", "theta", "balloon"}) {
        TrivalentGraph g = fixture(name);
        auto pts2 = points_of_degree(g, 2);
        auto pts3 = points_of_degree(g, 3);
        for (int trial = 0; trial < 50; ++trial) {
            const ConeElement& a = pts2[rng() % pts2.size()];
            const ConeElement& b = pts3[rng() % pts3.size()];
            ConeElement s = add(a, b);
            CHECK(s.degree == 5);
            CHECK(in_cone(g, s));
            CHECK(deg_min(g, s) <= deg_min(g, a) + deg_min(g, b));
        }
    }
}

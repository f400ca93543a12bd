#include "ctop/strand_graph.hpp"
#include "doctest.h"

using namespace ctop;

TEST_CASE("component counting distinguishes arcs and closed curves") {
    StrandGraph g;
    int a = g.add_node(), b = g.add_node(), c = g.add_node();
    g.add_bond(a, b);
    g.add_bond(b, c);
    int u = g.add_node(), v = g.add_node();
    g.add_bond(u, v);
    g.add_bond(u, v);  // two parallel bonds close a circle
    g.add_node();      // isolated node is not a strand
    auto counts = g.count();
    CHECK(counts.arcs == 1);
    CHECK(counts.closed == 1);
}

TEST_CASE("degree cap rejects branching") {
    StrandGraph g;
    int a = g.add_node(), b = g.add_node(), c = g.add_node(), d = g.add_node();
    g.add_bond(a, b);
    g.add_bond(a, c);
    CHECK_THROWS_AS(g.add_bond(a, d), MalformedDiagram);
    CHECK_THROWS_AS(g.add_bond(d, d), MalformedDiagram);  // self bond
}

TEST_CASE("per-group closed counts") {
    StrandGraph g;
    int a = g.add_node(), b = g.add_node();
    g.add_bond(a, b);
    g.add_bond(a, b);
    int c = g.add_node(), d = g.add_node();
    g.add_bond(c, d);
    g.add_bond(c, d);
    auto per = g.closed_by_group({0, 0, 1, 1}, 2);
    CHECK(per == std::vector<int>{1, 1});
    StrandGraph h;
    int x = h.add_node(), y = h.add_node();
    h.add_bond(x, y);
    h.add_bond(x, y);
    CHECK_THROWS_AS(h.closed_by_group({0, 1}, 2), MalformedDiagram);
}

TEST_CASE("rewrite cuts and reconnects three separate strands") {
    // three strands a1-a2, b1-b2, c1-c2 crossed in order; dig reconnects
    // a-side of site 1 to the far side of site 3
    StrandGraph g;
    int a1 = g.add_node(), a2 = g.add_node();
    int b1 = g.add_node(), b2 = g.add_node();
    int c1 = g.add_node(), c2 = g.add_node();
    int ea = g.add_bond(a1, a2);
    int eb = g.add_bond(b1, b2);
    int ec = g.add_bond(c1, c2);
    g.rewrite({{{ea, a1}, {eb, b1}, {ec, c1}}}, /*dig=*/true);
    auto reps = g.component_reps();
    CHECK(reps[a1] == reps[c2]);  // b1 side joins t3 side
    CHECK(reps[b1] == reps[c1]);  // b2-b3
    CHECK(reps[a2] == reps[b2]);  // t1-t2
    CHECK(g.count().arcs == 3);
    CHECK(g.count().closed == 0);
}

TEST_CASE("rewrite attach pattern") {
    StrandGraph g;
    int a1 = g.add_node(), a2 = g.add_node();
    int b1 = g.add_node(), b2 = g.add_node();
    int c1 = g.add_node(), c2 = g.add_node();
    int ea = g.add_bond(a1, a2);
    int eb = g.add_bond(b1, b2);
    int ec = g.add_bond(c1, c2);
    g.rewrite({{{ea, a1}, {eb, b1}, {ec, c1}}}, /*dig=*/false);
    auto reps = g.component_reps();
    CHECK(reps[a1] == reps[b1]);  // b1-b2
    CHECK(reps[c1] == reps[a2]);  // b3-t1
    CHECK(reps[c2] == reps[b2]);  // t3-t2
}

TEST_CASE("double cut on a shared strand keeps the middle piece") {
    // strand u-v crossed at sites 1 and 2, strand w-x at site 3
    StrandGraph g;
    int u = g.add_node(), v = g.add_node();
    int w = g.add_node(), x = g.add_node();
    int e1 = g.add_bond(u, v);
    int e2 = g.add_bond(w, x);
    g.rewrite({{{e1, u}, {e1, v}, {e2, w}}}, /*dig=*/true);
    // dig: b1-t3, b2-b3, t1-t2 (middle becomes a closed loop with t1-t2)
    auto counts = g.count();
    CHECK(counts.closed == 1);
    auto reps = g.component_reps();
    CHECK(reps[u] == reps[x]);
    CHECK(reps[v] == reps[w]);
    StrandGraph h;
    int p = h.add_node(), q = h.add_node();
    int r = h.add_node(), s = h.add_node();
    int f1 = h.add_bond(p, q);
    int f2 = h.add_bond(r, s);
    CHECK_THROWS_AS(h.rewrite({{{f1, p}, {f1, p}, {f2, r}}}, true), MalformedDiagram);
    CHECK_THROWS_AS(h.rewrite({{{f1, p}, {f1, q}, {f1, p}}}, true), MalformedDiagram);
}

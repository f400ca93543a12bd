#include "ctop/bypass.hpp"
#include "doctest.h"

using namespace ctop;

TEST_CASE("dig is trivial exactly when the upper two crossings share a chord") {
    // arc at pos crosses strands at pos, pos+1, pos+2; the move that digs
    // below leaves the diagram unchanged iff {pos+1, pos+2} is a chord
    for (int n = 2; n <= 4; ++n)
        for (auto& d : enumerate_disk_configs(n))
            for (int pos = 1; pos <= 2 * n; ++pos) {
                int b = pos % (2 * n) + 1;
                int c = b % (2 * n) + 1;
                bool upper_chord = d.partner(b) == c;
                CHECK(is_trivial_move(d, {pos, true}) == upper_chord);
            }
}

TEST_CASE("attach is trivial exactly when the lower two crossings share a chord") {
    for (int n = 2; n <= 4; ++n)
        for (auto& d : enumerate_disk_configs(n))
            for (int pos = 1; pos <= 2 * n; ++pos) {
                int b = pos % (2 * n) + 1;
                bool lower_chord = d.partner(pos) == b;
                CHECK(is_trivial_move(d, {pos, false}) == lower_chord);
            }
}

TEST_CASE("each move creates its short chord and is therefore idempotent") {
    // dig reconnects the two upper stubs directly, so {pos+1, pos+2} is a
    // chord afterwards and a second dig along the same arc does nothing;
    // symmetrically attach creates {pos, pos+1}
    for (int n = 2; n <= 4; ++n)
        for (auto& d : enumerate_disk_configs(n))
            for (int pos = 1; pos <= 2 * n; ++pos) {
                int b = pos % (2 * n) + 1;
                int c = b % (2 * n) + 1;
                auto dug = apply_bypass(d, {pos, true});
                CHECK(dug.diagram.partner(b) == c);
                CHECK(is_trivial_move(dug.diagram, {pos, true}));
                auto att = apply_bypass(d, {pos, false});
                CHECK(att.diagram.partner(pos) == b);
                CHECK(is_trivial_move(att.diagram, {pos, false}));
            }
}

TEST_CASE("a dig below a boundary-parallel chord pinches off a closed loop") {
    ChordDiagram d(2, {{1, 2}, {3, 4}});
    auto r = apply_bypass(d, {1, true});
    CHECK(r.loops == 1);
    CHECK(r.diagram.key() == "1-4,2-3");
}

TEST_CASE("rewrites preserve the point count and never branch") {
    for (int n = 2; n <= 4; ++n)
        for (auto& d : enumerate_disk_configs(n))
            for (int pos = 1; pos <= 2 * n; ++pos)
                for (bool dig : {true, false}) {
                    auto r = apply_bypass(d, {pos, dig});
                    CHECK(r.diagram.n() == n);
                    CHECK(r.loops >= 0);
                    CHECK(r.loops <= 1);  // one arc can trap at most one piece
                }
}

TEST_CASE("example rewrite on three chords") {
    // digging across the three distinct chords nests them fully
    ChordDiagram d(3, {{1, 2}, {3, 6}, {4, 5}});
    auto r = apply_bypass(d, {2, true});
    CHECK(r.loops == 0);
    CHECK(r.diagram.key() == "1-6,2-5,3-4");
}

TEST_CASE("arc literal round trip") {
    std::string surface;
    DiskArc a = parse_arc_literal("arc on=A+ cross=(3,4,5)", 6, &surface);
    CHECK(surface == "A+");
    CHECK(a.pos == 3);
    CHECK(a.dig);
    CHECK(format_arc_literal("A+", a, 6) == "arc on=A+ cross=(3,4,5)");
    DiskArc b = parse_arc_literal("arc on=e1 cross=(5,6,1) side=attach", 6);
    CHECK(b.pos == 5);
    CHECK_FALSE(b.dig);
    CHECK(format_arc_literal("e1", b, 6) == "arc on=e1 cross=(5,6,1) side=attach");
    CHECK_THROWS_AS(parse_arc_literal("arc on=A+ cross=(3,5,4)", 6), std::invalid_argument);
    CHECK_THROWS_AS(parse_arc_literal("arc cross=(1,2,3)", 6), std::invalid_argument);
}

#include "ctop/piece.hpp"
#include "doctest.h"

using namespace ctop;

namespace {

// Torus as one square: side 1 glued to side 3 (meridian seam), side 0 to
// side 2.  Each height gives one longitudinal dividing curve crossing the
// seam once.
struct TorusFixture {
    PolygonalSurface s;
    int poly;
    explicit TorusFixture(const std::vector<double>& heights) {
        poly = s.add_polygon(4);
        s.pair_sides({poly, 0}, {poly, 2});
        s.pair_sides({poly, 1}, {poly, 3});
        for (double h : heights) {
            int r = s.add_mark({poly, 1}, h);
            int l = s.add_mark({poly, 3}, 1.0 - h);
            s.add_chord(r, l);
        }
        s.validate();
    }
    ManifoldPiece piece() const { return {"torus", s, {}, {}}; }
    CutCurve meridian() const { return {"meridian", {{poly, 1}}}; }
};

// The same torus out of two stacked squares, so the meridian seam is a
// two-edge cycle and the caps are bigons with chords spanning cap sides.
struct TwoSquareTorusFixture {
    PolygonalSurface s;
    int a, b;
    TwoSquareTorusFixture(const std::vector<double>& lower, const std::vector<double>& upper) {
        a = s.add_polygon(4);
        b = s.add_polygon(4);
        s.pair_sides({a, 2}, {b, 0});
        s.pair_sides({b, 2}, {a, 0});
        s.pair_sides({a, 1}, {a, 3});
        s.pair_sides({b, 1}, {b, 3});
        for (double h : lower) s.add_chord(s.add_mark({a, 1}, h), s.add_mark({a, 3}, 1.0 - h));
        for (double h : upper) s.add_chord(s.add_mark({b, 1}, h), s.add_mark({b, 3}, 1.0 - h));
        s.validate();
    }
    ManifoldPiece piece() const { return {"torus2", s, {}, {}}; }
    CutCurve meridian() const { return {"meridian", {{a, 1}, {b, 1}}}; }
};

// Genus 2 as a ring of four squares with the first and third rolled into
// handles (top glued to bottom) and the other two closed off against each
// other.  The handle meridians are then vertex-disjoint single-edge cut
// curves.  Each handle carries two closed dividing curves crossing its
// meridian once.
struct Genus2Fixture {
    PolygonalSurface s;
    int sq[4];
    Genus2Fixture() {
        for (int i = 0; i < 4; ++i) sq[i] = s.add_polygon(4);
        for (int i = 0; i < 4; ++i) s.pair_sides({sq[i], 1}, {sq[(i + 1) % 4], 3});
        s.pair_sides({sq[0], 0}, {sq[0], 2});
        s.pair_sides({sq[2], 0}, {sq[2], 2});
        s.pair_sides({sq[1], 2}, {sq[3], 2});
        s.pair_sides({sq[1], 0}, {sq[3], 0});
        for (int h : {sq[0], sq[2]}) {
            s.add_chord(s.add_mark({h, 0}, 0.3), s.add_mark({h, 2}, 0.7));
            s.add_chord(s.add_mark({h, 0}, 0.6), s.add_mark({h, 2}, 0.4));
        }
        s.validate();
    }
    ManifoldPiece piece() const { return {"genus2", s, {}, {}}; }
};

}  // namespace

TEST_CASE("meridian twisting matches the longitude count") {
    TorusFixture two({0.3, 0.6});
    CHECK(curve_tb(two.piece(), two.meridian()) == -1);
    TorusFixture four({0.2, 0.4, 0.6, 0.8});
    CHECK(curve_tb(four.piece(), four.meridian()) == -2);
}

TEST_CASE("cut and round the two-longitude solid torus") {
    TorusFixture t({0.3, 0.6});
    auto cut = cut_disk(t.piece(), t.meridian(), ChordDiagram(1, {{1, 2}}));
    CHECK(cut.boundary.boundary_circle_count() == 2);
    CHECK(cut.pending.size() == 1);
    auto done = round_edges(cut);
    CHECK(done.boundary.euler_characteristic() == 2);
    CHECK(done.boundary.boundary_circle_count() == 0);
    auto counts = done.boundary.count_dividing_components();
    CHECK(counts.closed == 1);
    CHECK(counts.arcs == 0);
    // on a sphere any closed curve bounds a disk
    CHECK(done.boundary.has_trivial_closed_curve());
}

TEST_CASE("four-longitude torus: both boundary-parallel disks give one curve") {
    TorusFixture t({0.2, 0.4, 0.6, 0.8});
    ChordDiagram outer(2, {{1, 2}, {3, 4}});
    ChordDiagram nested(2, {{1, 4}, {2, 3}});
    for (const auto& cfg : {outer, nested}) {
        auto done = round_edges(cut_disk(t.piece(), t.meridian(), cfg));
        CHECK(done.boundary.euler_characteristic() == 2);
        CHECK(done.boundary.count_dividing_components().closed == 1);
    }
}

TEST_CASE("assembly view agrees with surface rounding") {
    TorusFixture t({0.2, 0.4, 0.6, 0.8});
    ChordDiagram outer(2, {{1, 2}, {3, 4}});
    ChordDiagram nested(2, {{1, 4}, {2, 3}});
    for (const auto& cfg : {outer, nested}) {
        auto cut = cut_disk(t.piece(), t.meridian(), cfg);
        auto a = to_assembly(cut);
        int rounded = round_edges(cut).boundary.count_dividing_components().closed;
        CHECK(a.closed_counts({cfg, cfg}) == std::vector<int>{rounded});
        CHECK(rounded == 1);
    }
    // mismatched caps on the two copies are not a state of the piece, but the
    // assembly still counts them; the mixed pair splits into two curves
    auto a = to_assembly(cut_disk(t.piece(), t.meridian(), outer));
    CHECK(a.closed_counts({nested, outer}) == std::vector<int>{2});
}

TEST_CASE("a two-edge meridian cycle rounds the same as the one-edge model") {
    TwoSquareTorusFixture t({0.3, 0.6}, {0.4, 0.7});
    auto p = t.piece();
    CHECK(p.boundary.euler_characteristic() == 0);
    CHECK(curve_tb(p, t.meridian()) == -2);
    ChordDiagram outer(2, {{1, 2}, {3, 4}});
    ChordDiagram nested(2, {{1, 4}, {2, 3}});
    for (const auto& cfg : {outer, nested}) {
        auto cut = cut_disk(p, t.meridian(), cfg);
        CHECK(cut.pending[0].plus_sides.size() == 2);
        auto done = round_edges(cut);
        CHECK(done.boundary.euler_characteristic() == 2);
        CHECK(done.boundary.count_dividing_components().closed == 1);
        CHECK(to_assembly(cut).closed_counts({cfg, cfg}) == std::vector<int>{1});
    }
    auto a = to_assembly(cut_disk(p, t.meridian(), outer));
    CHECK(a.closed_counts({nested, outer}) == std::vector<int>{2});
}

TEST_CASE("closed curves away from the cut survive as base counts") {
    TorusFixture t({0.3, 0.6});
    t.s.add_floating_circles(t.poly);
    auto cut = cut_disk(t.piece(), t.meridian(), ChordDiagram(1, {{1, 2}}));
    ChordDiagram cap(1, {{1, 2}});
    CHECK(to_assembly(cut).closed_counts({cap, cap}) == std::vector<int>{2});
    auto done = round_edges(cut);
    CHECK(done.boundary.count_dividing_components().closed == 2);
}

TEST_CASE("reglue undoes a cut") {
    TorusFixture t({0.3, 0.6});
    auto before = t.piece();
    auto cut = cut_disk(before, t.meridian(), ChordDiagram(1, {{1, 2}}));
    auto back = reglue(cut, 0);
    CHECK(back.pending.empty());
    back.boundary.validate();
    CHECK(back.boundary.euler_characteristic() == 0);
    CHECK(back.boundary.boundary_circle_count() == 0);
    auto counts = back.boundary.count_dividing_components();
    CHECK(counts.closed == 2);
    CHECK(counts.arcs == 0);
    CHECK(back.boundary.canonical_signature() == before.boundary.canonical_signature());
}

TEST_CASE("fully cutting genus two yields a four-hole assembly") {
    Genus2Fixture g;
    auto p = g.piece();
    CHECK(p.boundary.euler_characteristic() == -2);
    CHECK(p.boundary.count_dividing_components().closed == 4);
    CutCurve ca{"a", {{g.sq[0], 0}}};
    CutCurve cc{"c", {{g.sq[2], 0}}};
    CHECK(curve_tb(p, ca) == -1);
    ChordDiagram cap(1, {{1, 2}});
    auto cut = cut_disk(cut_disk(p, ca, cap), cc, cap);

    // one cut is not enough: the piece still has genus
    CHECK_THROWS_AS(to_assembly(cut_disk(p, ca, cap)), MalformedDiagram);

    auto a = to_assembly(cut);
    auto done = round_edges(cut);
    CHECK(done.boundary.euler_characteristic() == 2);
    CHECK(a.closed_counts({cap, cap, cap, cap}) ==
          std::vector<int>{done.boundary.count_dividing_components().closed});
}

TEST_CASE("cut validation") {
    TorusFixture t({0.3, 0.6});
    auto p = t.piece();
    // wrong configuration size for the crossing count
    CHECK_THROWS_AS(cut_disk(p, t.meridian(), ChordDiagram(2, {{1, 2}, {3, 4}})),
                    MalformedDiagram);
    // both representatives of one gluing
    CHECK_THROWS_AS(cut_disk(p, {"bad", {{t.poly, 1}, {t.poly, 3}}}, ChordDiagram(1, {{1, 2}})),
                    MalformedDiagram);
    // curve missing the dividing set has tb = 0
    CHECK_THROWS_AS(cut_disk(p, {"empty", {{t.poly, 0}}}, ChordDiagram(1, {{1, 2}})),
                    MalformedDiagram);
    // free side is not a curve
    PolygonalSurface ann;
    int q = ann.add_polygon(4);
    ann.pair_sides({q, 1}, {q, 3});
    ManifoldPiece ap{"annulus", ann, {}, {}};
    CHECK_THROWS_AS(cut_disk(ap, {"free", {{q, 0}}}, ChordDiagram(1, {{1, 2}})),
                    MalformedDiagram);
    CHECK_THROWS_AS(to_assembly(p), std::invalid_argument);
    CHECK_THROWS_AS(reglue(p, 0), std::invalid_argument);
}

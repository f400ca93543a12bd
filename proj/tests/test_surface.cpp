#include "ctop/surface.hpp"
#include "doctest.h"

using namespace ctop;

namespace {

// rectangle with sides 0 bottom, 1 right, 2 top, 3 left, listed ccw; gluing
// right to left (reversed) makes an annulus whose core runs horizontally
struct AnnulusFixture {
    PolygonalSurface s;
    int poly;
    AnnulusFixture() {
        poly = s.add_polygon(4);
        s.pair_sides({poly, 1}, {poly, 3});
    }
    // core-parallel strand at the given height: one chord through the seam
    int add_core_strand(double h) {
        int r = s.add_mark({poly, 1}, h);
        int l = s.add_mark({poly, 3}, 1.0 - h);
        return s.add_chord(r, l);
    }
};

}  // namespace

TEST_CASE("euler characteristic and boundary circles of small complexes") {
    PolygonalSurface disk;
    disk.add_polygon(4);
    CHECK(disk.euler_characteristic() == 1);
    CHECK(disk.boundary_circle_count() == 1);

    AnnulusFixture ann;
    CHECK(ann.s.euler_characteristic() == 0);
    CHECK(ann.s.boundary_circle_count() == 2);

    PolygonalSurface torus;
    int t = torus.add_polygon(4);
    torus.pair_sides({t, 0}, {t, 2});
    torus.pair_sides({t, 1}, {t, 3});
    CHECK(torus.euler_characteristic() == 0);
    CHECK(torus.boundary_circle_count() == 0);

    PolygonalSurface sphere;
    int b = sphere.add_polygon(2);
    sphere.pair_sides({b, 0}, {b, 1});
    CHECK(sphere.euler_characteristic() == 2);
    CHECK(sphere.boundary_circle_count() == 0);

    PolygonalSurface two;
    int p0 = two.add_polygon(4);
    int p1 = two.add_polygon(4);
    two.pair_sides({p0, 1}, {p1, 3});
    CHECK(two.euler_characteristic() == 1);
    CHECK(two.boundary_circle_count() == 1);
}

TEST_CASE("component counting across gluings") {
    AnnulusFixture ann;
    ann.add_core_strand(0.3);
    ann.add_core_strand(0.6);
    ann.s.validate();
    auto c = ann.s.count_dividing_components();
    CHECK(c.closed == 2);
    CHECK(c.arcs == 0);

    PolygonalSurface disk;
    int p = disk.add_polygon(4);
    int a = disk.add_mark({p, 0}, 0.3);
    int b = disk.add_mark({p, 0}, 0.7);
    disk.add_chord(a, b);
    disk.validate();
    auto cd = disk.count_dividing_components();
    CHECK(cd.closed == 0);
    CHECK(cd.arcs == 1);

    disk.add_floating_circles(p, 2);
    CHECK(disk.count_dividing_components().closed == 2);
}

TEST_CASE("validation failures") {
    AnnulusFixture ann;
    int r = ann.s.add_mark({ann.poly, 1}, 0.3);
    int l = ann.s.add_mark({ann.poly, 3}, 0.7);
    SUBCASE("mark count mismatch across a gluing") {
        PolygonalSurface s2 = ann.s;
        int extra = s2.add_mark({ann.poly, 1}, 0.5);
        s2.add_chord(r, extra);
        // side 3 still must carry the partner of l
        int l2 = s2.add_mark({ann.poly, 0}, 0.5);
        (void)l2;
        CHECK_THROWS_AS(s2.validate(), MalformedDiagram);
    }
    SUBCASE("mark without a chord") {
        CHECK_THROWS_AS(ann.s.validate(), MalformedDiagram);
    }
    SUBCASE("crossing chords") {
        ann.s.add_chord(r, l);
        int a = ann.s.add_mark({ann.poly, 0}, 0.2);
        int b = ann.s.add_mark({ann.poly, 0}, 0.4);
        int c = ann.s.add_mark({ann.poly, 0}, 0.6);
        int d = ann.s.add_mark({ann.poly, 0}, 0.8);
        ann.s.add_chord(a, c);
        ann.s.add_chord(b, d);
        CHECK_THROWS_AS(ann.s.validate(), MalformedDiagram);
    }
}

TEST_CASE("trivial curve detection") {
    SUBCASE("annulus core curves are essential") {
        AnnulusFixture ann;
        ann.add_core_strand(0.3);
        ann.add_core_strand(0.6);
        CHECK_FALSE(ann.s.has_trivial_closed_curve());
    }
    SUBCASE("floating circle is trivial") {
        AnnulusFixture ann;
        ann.add_core_strand(0.3);
        ann.add_core_strand(0.6);
        ann.s.add_floating_circles(ann.poly);
        CHECK(ann.s.has_trivial_closed_curve());
    }
    SUBCASE("two-crossing contractible loop on the torus") {
        PolygonalSurface torus;
        int t = torus.add_polygon(4);
        torus.pair_sides({t, 0}, {t, 2});
        torus.pair_sides({t, 1}, {t, 3});
        int a = torus.add_mark({t, 1}, 0.4);
        int b = torus.add_mark({t, 1}, 0.6);
        int c = torus.add_mark({t, 3}, 0.4);
        int d = torus.add_mark({t, 3}, 0.6);
        torus.add_chord(a, b);
        torus.add_chord(c, d);
        torus.validate();
        CHECK(torus.count_dividing_components().closed == 1);
        CHECK(torus.has_trivial_closed_curve());
        // its signature reduces to a single free circle
        PolygonalSurface just_circle;
        int t2 = just_circle.add_polygon(4);
        just_circle.pair_sides({t2, 0}, {t2, 2});
        just_circle.pair_sides({t2, 1}, {t2, 3});
        just_circle.add_floating_circles(t2);
        CHECK(torus.canonical_signature() == just_circle.canonical_signature());
    }
    SUBCASE("essential torus curve is not trivial") {
        PolygonalSurface torus;
        int t = torus.add_polygon(4);
        torus.pair_sides({t, 0}, {t, 2});
        torus.pair_sides({t, 1}, {t, 3});
        for (double h : {0.3, 0.6}) {
            int a = torus.add_mark({t, 1}, h);
            int b = torus.add_mark({t, 3}, 1.0 - h);
            torus.add_chord(a, b);
        }
        torus.validate();
        CHECK(torus.count_dividing_components().closed == 2);
        CHECK_FALSE(torus.has_trivial_closed_curve());
    }
}

TEST_CASE("signatures distinguish strand counts and match isotopic sets") {
    AnnulusFixture one;
    one.add_core_strand(0.5);
    AnnulusFixture two;
    two.add_core_strand(0.3);
    two.add_core_strand(0.6);
    AnnulusFixture two_shifted;
    two_shifted.add_core_strand(0.25);
    two_shifted.add_core_strand(0.85);
    CHECK(one.s.canonical_signature() != two.s.canonical_signature());
    CHECK(two.s.canonical_signature() == two_shifted.s.canonical_signature());
}

TEST_CASE("twisting numbers on the annulus") {
    AnnulusFixture ann;
    ann.add_core_strand(0.3);
    ann.add_core_strand(0.6);
    CurveOnSurface vert;
    vert.steps = {{ann.poly, {{ann.poly, 0}, 0.5}, {{ann.poly, 2}, 0.5}}};
    CHECK(twisting_number(vert, ann.s) == -1);

    CurveOnSurface core;
    core.closed = true;
    core.steps = {{ann.poly, {{ann.poly, 3}, 0.55}, {{ann.poly, 1}, 0.45}}};
    CHECK(twisting_number(core, ann.s) == 0);

    AnnulusFixture odd;
    odd.add_core_strand(0.5);
    CHECK_THROWS_AS(twisting_number(vert, odd.s), MalformedDiagram);
}

TEST_CASE("dig across a gluing reconnects three strands") {
    // two squares glued left-to-right; three strands run all the way across
    PolygonalSurface s;
    int A = s.add_polygon(4);
    int B = s.add_polygon(4);
    s.pair_sides({A, 1}, {B, 3});
    std::vector<int> chordA(3), chordB(3);
    std::vector<double> hs = {0.25, 0.5, 0.75};
    for (int i = 0; i < 3; ++i) {
        int la = s.add_mark({A, 3}, 1.0 - hs[i]);
        int ra = s.add_mark({A, 1}, hs[i]);
        int lb = s.add_mark({B, 3}, 1.0 - hs[i]);
        int rb = s.add_mark({B, 1}, hs[i]);
        chordA[i] = s.add_chord(la, ra);
        chordB[i] = s.add_chord(lb, rb);
    }
    s.validate();
    CHECK(s.count_dividing_components().arcs == 3);

    // arc descends in A across the 0.75 and 0.5 strands, slips into B at
    // height 0.375, and crosses the 0.25 strand there; b sides face left
    SurfaceArc m;
    m.sites = {ArcSite{chordA[2], s.chord(chordA[2]).first},
               ArcSite{chordA[1], s.chord(chordA[1]).first},
               ArcSite{chordB[0], s.chord(chordB[0]).first}};
    m.polys = {A, B};
    m.crossings = {{{A, 1}, 0.375}};
    m.site2_poly_index = 0;
    m.dig = true;
    PolygonalSurface t = apply_bypass(s, m);
    t.validate();
    auto c = t.count_dividing_components();
    CHECK(c.closed == 0);
    CHECK(c.arcs == 3);
    CHECK(t.euler_characteristic() == s.euler_characteristic());
}

TEST_CASE("double cut around the annulus core is a trivial move") {
    // arc starts on the 0.6 strand, crosses the 0.3 strand going down, runs
    // under it through the seam at height 0.1, and comes back up onto the
    // 0.3 strand from below; the short middle fragment lies on the b side
    AnnulusFixture ann;
    int a = ann.add_core_strand(0.3);
    int b = ann.add_core_strand(0.6);
    ann.s.validate();
    std::string before = ann.s.canonical_signature();

    auto [ra, la] = ann.s.chord(a);  // r mark then l mark
    auto [rb, lb] = ann.s.chord(b);
    SurfaceArc m;
    m.sites = {ArcSite{b, lb}, ArcSite{a, ra, true}, ArcSite{a, la, true}};
    m.polys = {ann.poly, ann.poly};
    m.crossings = {{{ann.poly, 1}, 0.1}};
    m.site2_poly_index = 0;
    m.dig = true;
    PolygonalSurface t = apply_bypass(ann.s, m);
    t.validate();
    auto c = t.count_dividing_components();
    CHECK(c.closed == 2);
    CHECK(c.arcs == 0);
    CHECK(t.canonical_signature() == before);
    CHECK(is_trivial_move(ann.s, m));

    // the non-embeddable transcription with the middle on the t sides is
    // rejected by the planarity check
    SurfaceArc bad = m;
    bad.sites[1] = ArcSite{a, la};
    bad.sites[2] = ArcSite{a, ra};
    CHECK_THROWS_AS(apply_bypass(ann.s, bad), MalformedDiagram);
}

TEST_CASE("fold inserts a parallel pair and its witness undoes it") {
    AnnulusFixture ann;
    ann.add_core_strand(0.3);
    ann.add_core_strand(0.6);
    ann.s.validate();
    std::string before = ann.s.canonical_signature();

    CurveOnSurface c;
    c.closed = true;
    c.steps = {{ann.poly, {{ann.poly, 3}, 0.55}, {{ann.poly, 1}, 0.45}}};
    auto [folded, mv] = fold(ann.s, c);
    folded.validate();
    auto counts = folded.count_dividing_components();
    CHECK(counts.closed == 4);
    CHECK(counts.arcs == 0);
    CHECK(folded.canonical_signature() != before);

    SurfaceArc undo = mv;
    undo.dig = false;
    PolygonalSurface back = apply_bypass(folded, undo);
    back.validate();
    CHECK(back.count_dividing_components().closed == 2);
    CHECK(back.canonical_signature() == before);
    CHECK(is_trivial_move(folded, undo) == false);  // removes a curve pair
}

TEST_CASE("fold rejects isolating curves") {
    // single strand annulus: the core curve at 0.5... use two strands both
    // above the curve so one complementary annulus misses the dividing set
    AnnulusFixture ann;
    ann.add_core_strand(0.6);
    ann.add_core_strand(0.8);
    CurveOnSurface c;
    c.closed = true;
    c.steps = {{ann.poly, {{ann.poly, 3}, 0.7}, {{ann.poly, 1}, 0.3}}};
    CHECK_THROWS_AS(fold(ann.s, c), MalformedDiagram);
}

#include "ctop/decomp2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "ctop/piece.hpp"

namespace ctop {

namespace {

// One boundary copy of the split surface: a twice-punctured torus built as
// a 10-gon base with three bands.  Band u joins base sides 0 and 3, band w
// joins sides 1 and 6, band v joins sides 5 and 8.  Base sides 4 and 9 stay
// free on the six-side boundary circle, sides 2 and 7 on the twelve-side
// circle.  The w-band polygons carry an extra free side on each flank of
// the co-core seam so that both ends of the long dividing arc land on the
// twelve-side circle with the spacing the ring gluing needs.
struct Copy {
    int base, ua, ub, va, vb, wa, wb;
};

constexpr int kRingPlus = 6;
constexpr int kRingMinus = 12;

// Ring of rectangles glued side 3 to side 1 around; side 0 faces copy 0,
// side 2 faces copy 1.  Same seam-crossing machinery as the separating
// splitting, generalized over the ring length.
struct Ring {
    PolygonalSurface* s = nullptr;
    std::vector<int> rect;

    int size() const { return static_cast<int>(rect.size()); }
    int mod(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

    // Marks both sides of the seam between positions j and j+1 at height h;
    // returns {mark in rect j, mark in rect j+1}.
    std::pair<int, int> cross_seam(int j, double h) {
        int out = s->add_mark({rect[mod(j)], 3}, 1.0 - h);
        int in = s->add_mark({rect[mod(j + 1)], 1}, h);
        return {out, in};
    }

    // Chains chords through the ring from a mark in start_rect to a mark in
    // end_rect after `steps` seam crossings in direction dir, with heights
    // rising from h0 to h1 (parallel routes must use disjoint height bands
    // or matching slopes to stay non-crossing).
    void route(int start_rect, int start_mark, int end_rect, int end_mark, int dir, int steps,
               double h0, double h1) {
        int cur_rect = start_rect, cur_mark = start_mark;
        for (int t = 1; t <= steps; ++t) {
            double h = h0 + (h1 - h0) * t / (steps + 1);
            auto [a, b] = dir > 0 ? cross_seam(cur_rect, h) : cross_seam(cur_rect - 1, h);
            if (dir > 0) {
                s->add_chord(cur_mark, a);
                cur_mark = b;
            } else {
                s->add_chord(cur_mark, b);
                cur_mark = a;
            }
            cur_rect = mod(cur_rect + dir);
        }
        if (cur_rect != end_rect)
            throw std::logic_error("route: step count does not reach the end rect");
        s->add_chord(cur_mark, end_mark);
    }

    // Signed displacement routing: delta > 0 runs with increasing rect
    // index, delta < 0 against it.
    void route_signed(int start_rect, int start_mark, int end_rect, int end_mark, int delta,
                      double h0, double h1) {
        if (delta == 0) throw std::logic_error("route_signed: zero displacement");
        route(start_rect, start_mark, end_rect, end_mark, delta > 0 ? 1 : -1, std::abs(delta),
              h0, h1);
    }

    // Essential closed curve around the ring at constant height.
    void add_ring_curve(double h) {
        std::vector<int> out(size()), in(size());
        for (int j = 0; j < size(); ++j) {
            auto [a, b] = cross_seam(j, h);
            out[j] = a;
            in[mod(j + 1)] = b;
        }
        for (int i = 0; i < size(); ++i) s->add_chord(in[i], out[i]);
    }
};

struct Builder {
    PolygonalSurface s;
    Copy copy[2];
    Ring rp, rm;

    Copy add_copy() {
        Copy h;
        h.base = s.add_polygon(10);
        h.ua = s.add_polygon(4);
        h.ub = s.add_polygon(4);
        h.va = s.add_polygon(4);
        h.vb = s.add_polygon(4);
        h.wa = s.add_polygon(5);
        h.wb = s.add_polygon(5);
        s.pair_sides({h.base, 0}, {h.ua, 0});
        s.pair_sides({h.base, 3}, {h.ub, 0});
        s.pair_sides({h.ua, 2}, {h.ub, 2});
        s.pair_sides({h.base, 5}, {h.va, 0});
        s.pair_sides({h.base, 8}, {h.vb, 0});
        s.pair_sides({h.va, 2}, {h.vb, 2});
        s.pair_sides({h.base, 1}, {h.wa, 0});
        s.pair_sides({h.base, 6}, {h.wb, 0});
        s.pair_sides({h.wa, 3}, {h.wb, 3});
        // Dividing arcs of the copy.  The short one parallels the interior
        // return arc of the cut system, crossing the base between the two
        // six-circle gaps; the long one parallels the w co-core inside wa.
        // Endpoint marks sit on ring-glued sides; the ring end marks below
        // are their gluing partners.
        s.add_chord(s.add_mark({h.base, 4}, 0.9), s.add_mark({h.base, 9}, 0.9));
        s.add_chord(s.add_mark({h.wa, 2}, 0.9), s.add_mark({h.wa, 4}, 0.1));
        return h;
    }

    // Free sides of one copy in boundary-walk order, verified at build time
    // against the surface's own walk.
    std::array<EdgeRef, kRingPlus> plus_circle(const Copy& h) const {
        return {{{h.base, 4}, {h.va, 1}, {h.vb, 3}, {h.base, 9}, {h.ua, 1}, {h.ub, 3}}};
    }
    std::array<EdgeRef, kRingMinus> minus_circle(const Copy& h) const {
        return {{{h.base, 2},
                 {h.ub, 1},
                 {h.ua, 3},
                 {h.wa, 1},
                 {h.wa, 2},
                 {h.wb, 4},
                 {h.base, 7},
                 {h.vb, 1},
                 {h.va, 3},
                 {h.wb, 1},
                 {h.wb, 2},
                 {h.wa, 4}}};
    }

    template <size_t N>
    void check_circle(const std::array<EdgeRef, N>& expect) const {
        std::vector<EdgeRef> walk = s.boundary_circle_of(expect[0]);
        if (walk.size() != N) throw std::logic_error("copy circle has unexpected length");
        int start = -1;
        for (size_t i = 0; i < N; ++i)
            if (walk[i].poly == expect[0].poly && walk[i].side == expect[0].side)
                start = static_cast<int>(i);
        for (size_t i = 0; i < N; ++i) {
            const EdgeRef& w = walk[(start + i) % N];
            if (w.poly != expect[i].poly || w.side != expect[i].side)
                throw std::logic_error("copy circle order mismatch");
        }
    }

    template <size_t N>
    void attach_ring(Ring& r, const std::array<EdgeRef, N>& c0,
                     const std::array<EdgeRef, N>& c1, int offset) {
        r.s = &s;
        r.rect.resize(N);
        for (size_t i = 0; i < N; ++i) r.rect[i] = s.add_polygon(4);
        for (int i = 0; i < static_cast<int>(N); ++i) {
            s.pair_sides({r.rect[i], 3}, {r.rect[r.mod(i + 1)], 1});
            s.pair_sides({r.rect[i], 0}, c0[i]);
            // the copies bound the product with opposite orientations, so
            // the ring meets copy 1 in reversed circle order; the offset
            // lines every band co-core seam pair up into a vertical curve
            s.pair_sides({r.rect[i], 2}, c1[r.mod(offset - i)]);
        }
    }
};

// Ring end marks: gluing partners of the dividing-arc endpoints.  On the
// six-ring the copy-0 arc enters from below at rects 0 and 3 and the copy-1
// arc from above at rects 3 and 0; the base displacement of a traversing
// arc is 3 of 6.  On the twelve-ring the ends sit at rects 4 and 11 both
// below and above (crosswise), with base displacements 7 and 5 of 12.
struct RingEnds {
    int b0, b1;  // copy-0 ends, bottom of the ring
    int t0, t1;  // copy-1 ends (same arc-end order), top of the ring
};

RingEnds plus_ends(Builder& b) {
    RingEnds e;
    e.b0 = b.s.add_mark({b.rp.rect[0], 0}, 0.1);
    e.b1 = b.s.add_mark({b.rp.rect[3], 0}, 0.1);
    e.t0 = b.s.add_mark({b.rp.rect[3], 2}, 0.1);
    e.t1 = b.s.add_mark({b.rp.rect[0], 2}, 0.1);
    return e;
}

RingEnds minus_ends(Builder& b) {
    RingEnds e;
    e.b0 = b.s.add_mark({b.rm.rect[4], 0}, 0.1);
    e.b1 = b.s.add_mark({b.rm.rect[11], 0}, 0.9);
    e.t0 = b.s.add_mark({b.rm.rect[11], 2}, 0.1);
    e.t1 = b.s.add_mark({b.rm.rect[4], 2}, 0.9);
    return e;
}

// Annulus configuration on one ring.  base0/base1 are the displacements of
// the two traversing arcs in the product position; holonomy adds full loops
// to both.  For the closed-curve families the two arcs stay boundary
// parallel (bottom to bottom, top to top) and k essential loops run around
// the ring between them.
void add_ring_config(Ring& r, const RingEnds& e, int bottom0, int bottom1, int base0, int base1,
                     const AnnulusDiagram& a, bool t2_forward) {
    int R = r.size();
    if (a.kind == AnnulusKind::T1) {
        r.route_signed(bottom0, e.b0, r.mod(bottom0 + base0), e.t0, base0 + R * a.k, 0.15,
                       0.85);
        r.route_signed(bottom1, e.b1, r.mod(bottom1 + base1), e.t1, base1 + R * a.k, 0.15,
                       0.85);
        return;
    }
    int dir = t2_forward ? 1 : -1;
    // bottom arc joins the two bottom ends, top arc the two top ends
    int bot = r.mod(bottom1 - bottom0);
    int top = r.mod(bottom0 + base0 - (bottom1 + base1));
    r.route_signed(bottom0, e.b0, r.mod(bottom1), e.b1, dir > 0 ? bot : bot - R, 0.15, 0.21);
    r.route_signed(r.mod(bottom1 + base1), e.t1, r.mod(bottom0 + base0), e.t0,
                   dir > 0 ? top : top - R, 0.79, 0.85);
    for (int c = 0; c < a.k; ++c) r.add_ring_curve(0.30 + 0.40 * (c + 1) / (a.k + 1));
}

}  // namespace

NonsepModel split_nonseparating_mixed(const AnnulusDiagram& a, const AnnulusDiagram& m) {
    Builder b;
    b.copy[0] = b.add_copy();
    b.copy[1] = b.add_copy();
    b.check_circle(b.plus_circle(b.copy[0]));
    b.check_circle(b.minus_circle(b.copy[0]));
    b.attach_ring(b.rp, b.plus_circle(b.copy[0]), b.plus_circle(b.copy[1]), 3);
    b.attach_ring(b.rm, b.minus_circle(b.copy[0]), b.minus_circle(b.copy[1]), 3);

    RingEnds ep = plus_ends(b);
    RingEnds em = minus_ends(b);
    add_ring_config(b.rp, ep, 0, 3, 3, 3, a, a.kind != AnnulusKind::T2minus);
    add_ring_config(b.rm, em, 4, 11, 7, 5, m, m.kind != AnnulusKind::T2minus);

    b.s.validate();

    const Copy& c0 = b.copy[0];
    const Copy& c1 = b.copy[1];
    const std::vector<int>& rp = b.rp.rect;
    const std::vector<int>& rm = b.rm.rect;
    // Vertical compressing disks over the three band co-cores, listed in
    // cutting order: u-band, v-band, w-band.  Each curve is a cycle of
    // glued seams; representatives are listed all on one side.
    CutCurve d1{"d1", {{c0.ua, 2}, {rm[2], 1}, {c1.ub, 2}, {rp[4], 3}}};
    CutCurve d2{"d2", {{c0.vb, 2}, {rp[2], 1}, {c1.va, 2}, {rm[7], 3}}};
    CutCurve d3{"d3", {{c0.wb, 3}, {rm[5], 1}, {c1.wb, 3}, {rm[10], 3}}};

    NonsepModel out;
    out.piece = {{"nonsep", b.s, {}, {}}, {d1, d2, d3}};
    out.annulus = a;
    out.ring_plus = rp;
    out.ring_minus = rm;
    return out;
}

std::vector<int> ring_positions(const NonsepModel& m, int disk) {
    std::vector<int> ring = m.ring_plus;
    ring.insert(ring.end(), m.ring_minus.begin(), m.ring_minus.end());
    ManifoldPiece cut = m.piece.piece;
    for (int d = 0; d <= disk; ++d) {
        int n = -curve_tb(cut, m.piece.disks[d]);
        ChordDiagram cfg = enumerate_disk_configs(n).front();
        cut = cut_disk(cut, m.piece.disks[d], cfg);
        if (d < disk) continue;
        const PendingCut& p = cut.pending.back();
        std::vector<int> out;
        for (size_t i = 0; i < p.plus_marks.size(); ++i) {
            EdgeRef e = cut.boundary.mark(p.plus_marks[i]).e;
            if (std::find(ring.begin(), ring.end(), e.poly) != ring.end())
                out.push_back(static_cast<int>(i) + 1);
        }
        return out;
    }
    throw std::invalid_argument("ring_positions: no such disk");
}

ScenarioReport verify_nonsep_categories(int threads) {
    (void)threads;
    throw std::logic_error("not implemented yet");
}

ScenarioReport verify_nonsep_equivalences(int threads) {
    (void)threads;
    throw std::logic_error("not implemented yet");
}

ScenarioReport verify_main_theorem(int threads) {
    (void)threads;
    throw std::logic_error("not implemented yet");
}

}  // namespace ctop

// Scratch diagnostics for the split model; not installed.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ctop/scenarios.hpp"
#include "ctop/cover.hpp"

using namespace ctop;

static void inspect(const AnnulusDiagram& a) {
    std::printf("=== %s ===\n", format_annulus_literal(a).c_str());
    try {
        SplitModel m = split_along_A(a);
        const ManifoldPiece& p = m.plus.piece;
        std::printf("chi=%d boundary_circles=%d\n", p.boundary.euler_characteristic(),
                    p.boundary.boundary_circle_count());
        auto counts = p.boundary.count_dividing_components();
        std::printf("closed=%d arcs=%d trivial=%d\n", counts.closed, counts.arcs,
                    (int)p.boundary.has_trivial_closed_curve());
        for (int d = 0; d < 2; ++d)
            std::printf("tb(d%d)=%d\n", d + 1, curve_tb(p, m.plus.disks[d]));
        for (int d = 0; d < 2; ++d) {
            auto sp = seam_positions(m, d);
            std::printf("seam positions d%d:", d + 1);
            for (int x : sp) std::printf(" %d", x);
            std::printf("\n");
        }
        {
            int n1 = -curve_tb(p, m.plus.disks[0]);
            for (const ChordDiagram& cfg : enumerate_disk_configs(n1)) {
                ManifoldPiece cut = cut_disk(p, m.plus.disks[0], cfg);
                ManifoldPiece rd = round_edges(cut);
                auto cc = rd.boundary.count_dividing_components();
                std::printf("  seq d1=%-18s closed=%d trivial=%d tb(d2)=%d\n", cfg.key().c_str(),
                            cc.closed, (int)rd.boundary.has_trivial_closed_curve(),
                            curve_tb(rd, m.plus.disks[1]));
            }
        }
        Classifier c(m.plus);
        auto states = c.enumerate_states();
        std::printf("states=%zu\n", states.size());
        for (const State& s : states) {
            auto cc = c.closed_counts(s);
            std::printf("  %-30s counts=%d %s\n", s.key().c_str(), cc[0],
                        c.potentially_allowable(s) ? "ALLOWABLE" : "");
        }
        auto [g, v] = c.classify({1000000, 2});
        std::printf("classes=%zu tight=%d edges=%zu\n", v.classes.size(), v.tight_count,
                    g.edges.size());
        for (const TransitionEdge& e : g.edges)
            std::printf("  edge %s -> %s  disk=%d copy=%d pos=%d\n",
                        g.states[e.source].key().c_str(), g.states[e.target].key().c_str(),
                        e.disk, e.copy, e.arc.pos);
        for (const ClassInfo& cl : v.classes)
            std::printf("  class %d size=%d tight=%d rep=%s\n", cl.id, cl.size, (int)cl.tight,
                        g.states[cl.representative].key().c_str());
        std::printf("signature-hash=%zu\n",
                    std::hash<std::string>{}(p.boundary.canonical_signature()));
    } catch (const std::exception& e) {
        std::printf("EXCEPTION: %s\n", e.what());
    }
}

// Try candidate transcriptions of the holonomy-shifting bypass arc along
// the ring of the efficient T1 build and report which validate and whether
// they are trivial moves.
static void try_ring_arcs() {
    SplitModel m = split_along_A({AnnulusKind::T1, 0});
    const PolygonalSurface& s = m.plus.piece.boundary;
    const std::vector<int>& rect = m.seam_polys;
    auto chord_in = [&](int poly) {
        for (int c = 0; c < s.chord_count(); ++c)
            if (s.mark(s.chord(c).first).e.poly == poly) return c;
        return -1;
    };
    int c0 = chord_in(rect[0]), c3 = chord_in(rect[3]);
    std::printf("c0=%d c3=%d\n", c0, c3);
    auto [m0a, m0b] = s.chord(c0);  // added as (bottom, top)
    auto [m3a, m3b] = s.chord(c3);
    for (int dig = 0; dig < 2; ++dig)
        for (int bottom = 0; bottom < 2; ++bottom)
            for (int v1 = 0; v1 < 2; ++v1)
                for (int v23 = 0; v23 < 2; ++v23)
                    for (int uo = 0; uo < 2; ++uo) {
                        double h = bottom ? 0.10 : 0.90;
                        double h2 = bottom == uo ? 0.07 : 0.13;
                        double h3 = bottom == uo ? 0.04 : 0.16;
                        if (!bottom) {
                            h2 = 1.0 - h2;
                            h3 = 1.0 - h3;
                        }
                        SurfaceArc a;
                        a.sites = {ArcSite{c0, v1 ? m0b : m0a},
                                   ArcSite{c3, v23 ? m3b : m3a, true},
                                   ArcSite{c3, v23 ? m3a : m3b, true}};
                        a.polys = {rect[0], rect[1], rect[2], rect[3], rect[4], rect[3]};
                        a.crossings = {{{rect[0], 3}, 1 - h},
                                       {{rect[1], 3}, 1 - h},
                                       {{rect[2], 3}, 1 - h},
                                       {{rect[3], 3}, 1 - h2},
                                       {{rect[4], 1}, h3}};
                        a.site2_poly_index = 3;
                        a.dig = dig != 0;
                        std::printf("dig=%d bottom=%d v1=%d v23=%d uo=%d: ", dig, bottom, v1,
                                    v23, uo);
                        try {
                            PolygonalSurface t = apply_bypass(s, a);
                            t.validate();
                            auto cc = t.count_dividing_components();
                            std::printf("ok closed=%d arcs=%d trivial_move=%d\n", cc.closed,
                                        cc.arcs, (int)is_trivial_move(s, a));
                        } catch (const std::exception& e) {
                            std::printf("EXC %s\n", e.what());
                        }
                    }
}

#include "ctop/decomp2.hpp"

// Flip cut-curve representatives to their gluing partners per bitmask.
static CutCurve flip_reps(const PolygonalSurface& s, const CutCurve& c, unsigned mask) {
    CutCurve out = c;
    for (size_t i = 0; i < c.edges.size(); ++i)
        if (mask & (1u << i)) out.edges[i] = *s.partner(c.edges[i]);
    return out;
}

static void inspect_dec2(const AnnulusDiagram& a) {
    std::printf("=== dec2 %s ===\n", format_annulus_literal(a).c_str());
    try {
        NonsepModel m = split_nonseparating(a);
        const ManifoldPiece& p = m.piece.piece;
        std::printf("chi=%d boundary_circles=%d\n", p.boundary.euler_characteristic(),
                    p.boundary.boundary_circle_count());
        auto counts = p.boundary.count_dividing_components();
        std::printf("closed=%d arcs=%d trivial=%d\n", counts.closed, counts.arcs,
                    (int)p.boundary.has_trivial_closed_curve());
        for (int d = 0; d < 3; ++d)
            std::printf("tb(d%d)=%d\n", d + 1, curve_tb(p, m.piece.disks[d]));
        // sequential cut attempt with representative flip search per disk
        ManifoldPiece cut = p;
        for (int d = 0; d < 3; ++d) {
            int n = -curve_tb(cut, m.piece.disks[d]);
            ChordDiagram cfg = enumerate_disk_configs(n).front();
            bool done = false;
            for (unsigned mask = 0; mask < 16 && !done; ++mask) {
                try {
                    CutCurve c = flip_reps(cut.boundary, m.piece.disks[d], mask);
                    cut = cut_disk(cut, c, cfg);
                    std::printf("cut d%d ok n=%d mask=%u\n", d + 1, n, mask);
                    done = true;
                } catch (const std::exception& e) {
                    if (mask == 15) std::printf("cut d%d FAILED: %s\n", d + 1, e.what());
                }
            }
            if (!done) return;
        }
        try {
            SphereAssembly asmb = to_assembly(cut);
            std::printf("assembly balls=%d holes=%zu\n", asmb.balls(), asmb.holes().size());
        } catch (const std::exception& e) {
            std::printf("to_assembly FAILED: %s\n", e.what());
        }
        for (int d = 0; d < 3; ++d) {
            ManifoldPiece cc2 = m.piece.piece;
            for (int e = 0; e < d; ++e) {
                int n = -curve_tb(cc2, m.piece.disks[e]);
                cc2 = cut_disk(cc2, m.piece.disks[e], enumerate_disk_configs(n).front());
            }
            int n = -curve_tb(cc2, m.piece.disks[d]);
            cc2 = cut_disk(cc2, m.piece.disks[d], enumerate_disk_configs(n).front());
            const PendingCut& pc = cc2.pending.back();
            std::printf("positions d%d:", d + 1);
            for (size_t i = 0; i < pc.plus_marks.size(); ++i) {
                EdgeRef e = cc2.boundary.mark(pc.plus_marks[i]).e;
                const char* tag = "copy";
                for (int poly : m.ring_plus)
                    if (e.poly == poly) tag = "R+";
                for (int poly : m.ring_minus)
                    if (e.poly == poly) tag = "R-";
                std::printf(" %zu:%s(p%d)", i + 1, tag, e.poly);
            }
            std::printf("\n");
        }
        Classifier c(m.piece);
        auto states = c.enumerate_states();
        std::printf("states=%zu\n", states.size());
        int shown = 0;
        for (const State& s : states) {
            auto cc = c.closed_counts(s);
            bool al = c.potentially_allowable(s);
            if (al || states.size() <= 30)
                std::printf("  %-40s counts=%d %s\n", s.key().c_str(), cc[0],
                            al ? "ALLOWABLE" : "");
            if (++shown > 200) break;
        }
        auto [g, v] = c.classify({1000000, 0});
        std::printf("classes=%zu tight=%d edges=%zu\n", v.classes.size(), v.tight_count,
                    g.edges.size());
        for (const ClassInfo& cl : v.classes)
            std::printf("  class %d size=%d tight=%d rep=%s\n", cl.id, cl.size, (int)cl.tight,
                        g.states[cl.representative].key().c_str());
    } catch (const std::exception& e) {
        std::printf("EXCEPTION: %s\n", e.what());
    }
}

static std::vector<int> chords_in_poly(const PolygonalSurface& s, int poly) {
    std::vector<int> cs;
    for (int c = 0; c < s.chord_count(); ++c)
        if (s.mark(s.chord(c).first).e.poly == poly) cs.push_back(c);
    return cs;
}

// Bypass arcs with all three sites inside one ring rectangle.
static std::vector<SurfaceArc> rect_arcs(const PolygonalSurface& s, int poly, int dig) {
    std::vector<SurfaceArc> out;
    std::vector<int> cs = chords_in_poly(s, poly);
    int n = (int)cs.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (int mask = 0; mask < 8; ++mask) {
                    auto end = [&](int c, bool second) {
                        auto [x, y] = s.chord(c);
                        return second ? y : x;
                    };
                    SurfaceArc a;
                    a.sites = {ArcSite{cs[i], end(cs[i], mask & 1)},
                               ArcSite{cs[j], end(cs[j], mask & 2)},
                               ArcSite{cs[k], end(cs[k], mask & 4)}};
                    a.polys = {poly};
                    a.crossings = {};
                    a.site2_poly_index = 0;
                    a.dig = dig != 0;
                    out.push_back(a);
                }
            }
    return out;
}

// U-turn arcs around a ring: cross one strand in rect a, run around the
// ring at an extreme height to rect b, cross a strand there, continue one
// rect further and return, crossing the same strand again.
static std::vector<SurfaceArc> uturn_arcs(const PolygonalSurface& s, const std::vector<int>& rect,
                                          int dig) {
    std::vector<SurfaceArc> out;
    int R = (int)rect.size();
    auto md = [&](int i) { return ((i % R) + R) % R; };
    for (int a = 0; a < R; ++a)
        for (int dir : {1, -1})
            for (int span = 2; span < R; ++span) {
                int b = md(a + dir * span);
                for (int ca : chords_in_poly(s, rect[a]))
                    for (int cb : chords_in_poly(s, rect[b])) {
                        if (ca == cb) continue;
                        for (int variant = 0; variant < 16; ++variant) {
                            int v1 = variant & 1, v23 = (variant >> 1) & 1,
                                bottom = (variant >> 2) & 1, uo = (variant >> 3) & 1;
                            double h = bottom ? 0.06 : 0.94;
                            double h2 = bottom ? (uo ? 0.03 : 0.09) : (uo ? 0.97 : 0.91);
                            double h3 = bottom ? (uo ? 0.015 : 0.12) : (uo ? 0.985 : 0.88);
                            auto [ma1, ma2] = s.chord(ca);
                            auto [mb1, mb2] = s.chord(cb);
                            SurfaceArc m;
                            m.sites = {ArcSite{ca, v1 ? ma2 : ma1},
                                       ArcSite{cb, v23 ? mb2 : mb1, true},
                                       ArcSite{cb, v23 ? mb1 : mb2, true}};
                            for (int t = 0; t <= span; ++t) m.polys.push_back(rect[md(a + dir * t)]);
                            m.polys.push_back(rect[md(a + dir * (span + 1))]);
                            m.polys.push_back(rect[b]);
                            m.crossings.clear();
                            for (int t = 0; t < span; ++t) {
                                int cur = md(a + dir * t);
                                if (dir > 0)
                                    m.crossings.push_back({{rect[cur], 3}, 1 - h});
                                else
                                    m.crossings.push_back({{rect[cur], 1}, h});
                            }
                            if (dir > 0) {
                                m.crossings.push_back({{rect[b], 3}, 1 - h2});
                                m.crossings.push_back({{rect[md(b + 1)], 1}, h3});
                            } else {
                                m.crossings.push_back({{rect[b], 1}, h2});
                                m.crossings.push_back({{rect[md(b - 1)], 3}, 1 - h3});
                            }
                            m.site2_poly_index = span;
                            m.dig = dig != 0;
                            out.push_back(m);
                        }
                    }
            }
    return out;
}

// Straddling arcs: corridor runs through span+1 consecutive rects at an
// extreme height; the three sites sit on distinct chords in the first rect,
// some middle rect, and the last rect.
static std::vector<SurfaceArc> run_arcs(const PolygonalSurface& s, const std::vector<int>& rect,
                                        int dig, int max_span) {
    std::vector<SurfaceArc> out;
    int R = (int)rect.size();
    auto md = [&](int i) { return ((i % R) + R) % R; };
    for (int a = 0; a < R; ++a)
        for (int dir : {1, -1})
            for (int span = 1; span <= max_span && span < R; ++span) {
                int b = md(a + dir * span);
                for (int j = 0; j <= span; ++j) {
                    int mid = md(a + dir * j);
                    for (int c1 : chords_in_poly(s, rect[a]))
                        for (int c2 : chords_in_poly(s, rect[mid]))
                            for (int c3 : chords_in_poly(s, rect[b])) {
                                if (c1 == c2 || c2 == c3 || c1 == c3) continue;
                                for (int variant = 0; variant < 16; ++variant) {
                                    int m1 = variant & 1, m2 = (variant >> 1) & 1,
                                        m3 = (variant >> 2) & 1, bottom = (variant >> 3) & 1;
                                    double h = bottom ? 0.06 : 0.94;
                                    auto end = [&](int c, bool second) {
                                        auto [x, y] = s.chord(c);
                                        return second ? y : x;
                                    };
                                    SurfaceArc m;
                                    m.sites = {ArcSite{c1, end(c1, m1)}, ArcSite{c2, end(c2, m2)},
                                               ArcSite{c3, end(c3, m3)}};
                                    for (int t = 0; t <= span; ++t)
                                        m.polys.push_back(rect[md(a + dir * t)]);
                                    for (int t = 0; t < span; ++t) {
                                        int cur = md(a + dir * t);
                                        if (dir > 0)
                                            m.crossings.push_back({{rect[cur], 3}, 1 - h});
                                        else
                                            m.crossings.push_back({{rect[cur], 1}, h});
                                    }
                                    m.site2_poly_index = j;
                                    m.dig = dig != 0;
                                    out.push_back(m);
                                }
                            }
                }
            }
    return out;
}

static std::vector<SurfaceArc> all_ring_arcs(const PolygonalSurface& s,
                                             const std::vector<int>& rect, int dig) {
    std::vector<SurfaceArc> out;
    for (int p : rect) {
        auto v = rect_arcs(s, p, dig);
        out.insert(out.end(), v.begin(), v.end());
    }
    auto v = uturn_arcs(s, rect, dig);
    out.insert(out.end(), v.begin(), v.end());
    v = run_arcs(s, rect, dig, 4);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

static void search_equiv(const std::string& from, const std::string& to) {
    NonsepModel X = split_nonseparating(parse_annulus_literal(from, true));
    NonsepModel Y = split_nonseparating(parse_annulus_literal(to, true));
    std::string target = Y.piece.piece.boundary.canonical_signature();
    auto tc = Y.piece.piece.boundary.count_dividing_components();
    const PolygonalSurface& S = X.piece.piece.boundary;
    std::printf("search %s -> %s (target closed=%d)\n", from.c_str(), to.c_str(), tc.closed);
    for (int swap = 0; swap < 2; ++swap) {
        const auto& r1 = swap ? X.ring_minus : X.ring_plus;
        const auto& r2 = swap ? X.ring_plus : X.ring_minus;
        for (int dig1 = 0; dig1 < 2; ++dig1) {
            auto stage1 = all_ring_arcs(S, r1, dig1);
            int tried1 = 0, ok1 = 0, tried2 = 0;
            for (size_t i1 = 0; i1 < stage1.size(); ++i1) {
                ++tried1;
                PolygonalSurface t1;
                try {
                    t1 = apply_bypass(S, stage1[i1]);
                    t1.validate();
                } catch (...) {
                    continue;
                }
                auto c1 = t1.count_dividing_components();
                if (std::abs(c1.closed - tc.closed) > 2 || c1.arcs != tc.arcs) continue;
                if (t1.has_trivial_closed_curve()) continue;
                ++ok1;
                for (int dig2 = 0; dig2 < 2; ++dig2) {
                    auto stage2 = all_ring_arcs(t1, r2, dig2);
                    for (size_t i2 = 0; i2 < stage2.size(); ++i2) {
                        ++tried2;
                        PolygonalSurface t2;
                        try {
                            t2 = apply_bypass(t1, stage2[i2]);
                            t2.validate();
                        } catch (...) {
                            continue;
                        }
                        auto c2 = t2.count_dividing_components();
                        if (c2.closed != tc.closed || c2.arcs != tc.arcs) continue;
                        if (t2.has_trivial_closed_curve()) continue;
                        if (t2.canonical_signature() == target) {
                            std::printf("HIT swap=%d dig1=%d dig2=%d arc1=#%zu arc2=#%zu\n", swap,
                                        dig1, dig2, i1, i2);
                            auto dump = [&](const PolygonalSurface& ss, const SurfaceArc& a,
                                            const char* tag) {
                                std::printf("  %s dig=%d sites:", tag, (int)a.dig);
                                for (const ArcSite& st : a.sites) {
                                    auto [m1, m2] = ss.chord(st.chord);
                                    EdgeRef e1 = ss.mark(m1).e, e2 = ss.mark(m2).e,
                                            eb = ss.mark(st.b_mark).e;
                                    std::printf(
                                        " (chord=%d ends=[p%d.%d@%.3f,p%d.%d@%.3f] b=%d@p%d.%d "
                                        "mid=%d)",
                                        st.chord, e1.poly, e1.side, ss.mark(m1).pos, e2.poly,
                                        e2.side, ss.mark(m2).pos, st.b_mark, eb.poly, eb.side,
                                        (int)st.b_is_middle);
                                }
                                std::printf(" polys:");
                                for (int p : a.polys) std::printf(" %d", p);
                                std::printf(" crossings:");
                                for (auto& cr : a.crossings)
                                    std::printf(" p%d.%d@%.3f", cr.e.poly, cr.e.side, cr.pos);
                                std::printf("\n");
                            };
                            dump(S, stage1[i1], "ring1");
                            dump(t1, stage2[i2], "ring2");
                            return;
                        }
                    }
                }
            }
            std::printf("  swap=%d dig1=%d stage1=%d valid=%d stage2-tried=%d: no hit\n", swap,
                        dig1, tried1, ok1, tried2);
        }
    }
}

int main(int argc, char** argv) {
    if (argc > 3 && std::string(argv[1]) == "dec2eq") {
        search_equiv(argv[2], argv[3]);
        return 0;
    }
    if (argc > 2 && std::string(argv[1]) == "dec2") {
        for (int i = 2; i < argc; ++i) inspect_dec2(parse_annulus_literal(argv[i], true));
        return 0;
    }
    if (argc > 1 && std::string(argv[1]) == "trivarc") {
        try_ring_arcs();
        return 0;
    }
    if (argc > 2 && std::string(argv[1]) == "cover") {
        std::printf("%s", scenario_json(verify_cover({std::atoi(argv[2])})).c_str());
        return 0;
    }
    if (argc > 1 && std::string(argv[1]) == "scenario") {
        for (const std::string& id :
             argc > 2 ? std::vector<std::string>(argv + 2, argv + argc) : scenario_ids())
            std::printf("%s", scenario_json(run_scenario(id)).c_str());
        return 0;
    }
    if (argc > 2 && std::string(argv[1]) == "reduce") {
        for (int i = 2; i < argc; ++i) {
            ReductionPath p = reduce_annulus(parse_annulus_literal(argv[i], true));
            std::printf("%s -> %s in %zu steps\n", format_annulus_literal(p.initial).c_str(),
                        format_annulus_literal(p.terminal).c_str(), p.steps.size());
            for (const ReductionStep& s : p.steps)
                std::printf("  %s -> %s  [%s]\n", format_annulus_literal(s.from).c_str(),
                            format_annulus_literal(s.to).c_str(), s.certificate.c_str());
        }
        return 0;
    }
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) inspect(parse_annulus_literal(argv[i], true));
        return 0;
    }
    inspect({AnnulusKind::T1, 0});
    inspect({AnnulusKind::T1, 1});
    inspect({AnnulusKind::T1, -1});
    inspect({AnnulusKind::T2plus, 1});
    inspect({AnnulusKind::T2minus, 1});
    return 0;
}

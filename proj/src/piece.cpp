#include "ctop/piece.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ctop {

namespace {

int marks_on_curve(const PolygonalSurface& s, const CutCurve& c) {
    int n = 0;
    for (EdgeRef e : c.edges) n += static_cast<int>(s.side_marks(e).size());
    return n;
}

int rot(int label, int shift, int points) {
    return ((label - 1 + shift) % points + points) % points + 1;
}

// glues a disk onto the freed circle through `start` and wires its chords:
// cfg pair (x,y) joins the circle marks labeled rot(x), rot(y), where the
// label of each mark comes from `label_of` (1-based)
void add_cap(PolygonalSurface& s, EdgeRef start, const std::map<int, int>& label_of,
             const ChordDiagram& cfg, int shift) {
    auto cycle = s.boundary_circle_of(start);
    int k = static_cast<int>(cycle.size());
    int cap = s.add_polygon(k);
    std::vector<int> cap_mark_by_label(cfg.points() + 1, -1);
    for (int j = 0; j < k; ++j) {
        int t = ((k - j) % k);
        s.pair_sides(cycle[j], {cap, t});
        for (int m : s.side_marks(cycle[j])) {
            auto it = label_of.find(m);
            if (it == label_of.end())
                throw MalformedDiagram("round_edges: foreign mark on a cut circle");
            cap_mark_by_label[it->second] = s.add_mark({cap, t}, 1.0 - s.mark(m).pos);
        }
    }
    for (auto [x, y] : cfg.pairs())
        s.add_chord(cap_mark_by_label[rot(x, shift, cfg.points())],
                    cap_mark_by_label[rot(y, shift, cfg.points())]);
}

}  // namespace

int curve_tb(const ManifoldPiece& p, const CutCurve& c) {
    int m = marks_on_curve(p.boundary, c);
    if (m % 2 != 0) throw MalformedDiagram("curve_tb: odd crossing count");
    return -m / 2;
}

ManifoldPiece cut_disk(const ManifoldPiece& p, const CutCurve& c, const ChordDiagram& cfg) {
    if (c.edges.empty()) throw std::invalid_argument("cut_disk: empty curve");
    std::set<std::pair<int, int>> seen;
    ManifoldPiece out = p;
    PendingCut cut{c.name, {}, {}, {}, {}, cfg};

    auto partners = p.boundary.mark_partners();
    std::vector<EdgeRef> partner_sides;
    for (EdgeRef e : c.edges) {
        auto q = p.boundary.partner(e);
        if (!q) throw MalformedDiagram("cut_disk: curve edge is not glued");
        for (EdgeRef side : {e, *q})
            if (!seen.insert({side.poly, side.side}).second)
                throw MalformedDiagram("cut_disk: curve revisits a side");
        partner_sides.push_back(*q);
    }
    int m = marks_on_curve(p.boundary, c);
    if (m == 0) throw MalformedDiagram("cut_disk: curve misses the dividing set (tb = 0)");
    if (m != cfg.points())
        throw MalformedDiagram("cut_disk: configuration size does not match tb");

    for (EdgeRef e : c.edges) out.boundary.unpair_sides(e);

    cut.plus_sides = out.boundary.boundary_circle_of(c.edges[0]);
    cut.minus_sides.reserve(cut.plus_sides.size());
    for (EdgeRef e : cut.plus_sides) {
        auto it = std::find(c.edges.begin(), c.edges.end(), e);
        if (it == c.edges.end())
            throw MalformedDiagram("cut_disk: curve is not a closed interior curve");
        cut.minus_sides.push_back(partner_sides[it - c.edges.begin()]);
    }
    for (EdgeRef e : out.boundary.boundary_circle_of(cut.minus_sides[0]))
        if (std::find(cut.minus_sides.begin(), cut.minus_sides.end(), e) == cut.minus_sides.end())
            throw MalformedDiagram("cut_disk: curve is not a closed interior curve");

    for (EdgeRef e : cut.plus_sides)
        for (int mk : out.boundary.side_marks(e)) {
            cut.plus_marks.push_back(mk);
            cut.minus_marks.push_back(partners[mk]);
        }
    out.pending.push_back(std::move(cut));
    out.history.push_back("cut " + c.name);
    return out;
}

ManifoldPiece round_edges(const ManifoldPiece& p) {
    ManifoldPiece out = p;
    for (const PendingCut& cut : p.pending) {
        int chi_before = out.boundary.euler_characteristic();
        std::map<int, int> plus_label, minus_label;
        for (size_t i = 0; i < cut.plus_marks.size(); ++i) {
            plus_label[cut.plus_marks[i]] = static_cast<int>(i) + 1;
            minus_label[cut.minus_marks[i]] = static_cast<int>(i) + 1;
        }
        add_cap(out.boundary, cut.plus_sides[0], plus_label, cut.cfg, 0);
        add_cap(out.boundary, cut.minus_sides[0], minus_label, cut.cfg, -1);
        if (out.boundary.euler_characteristic() != chi_before + 2)
            throw MalformedDiagram("round_edges: capping did not add a disk pair");
        out.history.push_back("round " + cut.name);
    }
    out.pending.clear();
    out.boundary.validate();
    return out;
}

ManifoldPiece reglue(const ManifoldPiece& p, int pending_index) {
    if (pending_index < 0 || pending_index >= static_cast<int>(p.pending.size()))
        throw std::invalid_argument("reglue: bad pending index");
    ManifoldPiece out = p;
    const PendingCut& cut = out.pending[pending_index];
    for (size_t i = 0; i < cut.plus_sides.size(); ++i)
        out.boundary.pair_sides(cut.plus_sides[i], cut.minus_sides[i]);
    out.history.push_back("reglue " + cut.name);
    out.pending.erase(out.pending.begin() + pending_index);
    return out;
}

SphereAssembly to_assembly(const ManifoldPiece& p) {
    const PolygonalSurface& s = p.boundary;
    if (p.pending.empty()) throw std::invalid_argument("to_assembly: no cuts recorded");

    auto comp = s.polygon_components();
    int nballs = 1 + *std::max_element(comp.begin(), comp.end());
    int ncuts = static_cast<int>(p.pending.size());

    // every component must be a sphere with holes, all holes from cuts
    if (s.boundary_circle_count() != 2 * ncuts ||
        s.euler_characteristic() != 2 * nballs - 2 * ncuts)
        throw MalformedDiagram("to_assembly: piece is not fully cut into balls");
    std::map<int, PointRef> point_of;  // mark id -> assembly point
    std::vector<Hole> holes;
    for (size_t i = 0; i < p.pending.size(); ++i) {
        const PendingCut& cut = p.pending[i];
        int sz = static_cast<int>(cut.plus_marks.size());
        int ball = comp[cut.plus_sides[0].poly];
        int ball_m = comp[cut.minus_sides[0].poly];
        holes.push_back({sz, 0, ball});
        holes.push_back({sz, -1, ball_m});
        for (int l = 0; l < sz; ++l) {
            point_of[cut.plus_marks[l]] = {static_cast<int>(2 * i), l + 1};
            point_of[cut.minus_marks[l]] = {static_cast<int>(2 * i) + 1, l + 1};
        }
    }

    // strand traversal: arcs between cut marks become planar strands, closed
    // components stay with their ball
    auto partners = s.mark_partners();
    std::map<int, int> chord_of;
    for (int c = 0; c < s.chord_count(); ++c) {
        chord_of[s.chord(c).first] = c;
        chord_of[s.chord(c).second] = c;
    }
    std::vector<std::pair<PointRef, PointRef>> planar;
    std::vector<int> base(nballs, 0);
    std::vector<char> chord_seen(s.chord_count(), 0);
    for (int m = 0; m < s.mark_count(); ++m) {
        if (partners[m] >= 0) continue;  // interior gluing
        if (!point_of.count(m))
            throw MalformedDiagram("to_assembly: boundary is not fully cut");
        int c = chord_of.at(m);
        if (chord_seen[c]) continue;
        int cur = m;
        while (true) {
            chord_seen[c] = 1;
            int other = s.chord(c).first == cur ? s.chord(c).second : s.chord(c).first;
            if (partners[other] < 0) {
                planar.push_back({point_of.at(m), point_of.at(other)});
                break;
            }
            cur = partners[other];
            c = chord_of.at(cur);
        }
    }
    for (int c = 0; c < s.chord_count(); ++c) {
        if (chord_seen[c]) continue;
        // closed component: walk it off and credit its ball
        int cur = s.chord(c).first;
        int cc = c;
        while (!chord_seen[cc]) {
            chord_seen[cc] = 1;
            int other = s.chord(cc).first == cur ? s.chord(cc).second : s.chord(cc).first;
            cur = partners[other];
            cc = chord_of.at(cur);
        }
        base[comp[s.mark(s.chord(c).first).e.poly]]++;
    }
    for (int pl = 0; pl < s.polygon_count(); ++pl) base[comp[pl]] += s.floating_circles_in(pl);

    return SphereAssembly(holes, planar, nballs, base);
}

}  // namespace ctop

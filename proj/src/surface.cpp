#include "ctop/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ctop {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int PolygonalSurface::add_polygon(int sides) {
    if (sides < 1) throw std::invalid_argument("add_polygon: need at least one side");
    poly_sides_.push_back(sides);
    floating_.push_back(0);
    return static_cast<int>(poly_sides_.size()) - 1;
}

int PolygonalSurface::pairing_of(EdgeRef e) const {
    for (size_t i = 0; i < pairings_.size(); ++i)
        if (pairings_[i].first == e || pairings_[i].second == e) return static_cast<int>(i);
    return -1;
}

void PolygonalSurface::pair_sides(EdgeRef a, EdgeRef b) {
    for (EdgeRef e : {a, b}) {
        if (e.poly < 0 || e.poly >= polygon_count() || e.side < 0 || e.side >= poly_sides_[e.poly])
            throw std::invalid_argument("pair_sides: side out of range");
        if (pairing_of(e) >= 0) throw MalformedDiagram("pair_sides: side already paired");
    }
    if (a == b) throw MalformedDiagram("pair_sides: cannot pair a side with itself");
    pairings_.emplace_back(a, b);
}

void PolygonalSurface::unpair_sides(EdgeRef e) {
    int p = pairing_of(e);
    if (p < 0) throw std::invalid_argument("unpair_sides: side is not paired");
    pairings_.erase(pairings_.begin() + p);
}

bool PolygonalSurface::is_free(EdgeRef e) const { return pairing_of(e) < 0; }

std::optional<EdgeRef> PolygonalSurface::partner(EdgeRef e) const {
    int p = pairing_of(e);
    if (p < 0) return std::nullopt;
    return pairings_[p].first == e ? pairings_[p].second : pairings_[p].first;
}

int PolygonalSurface::add_mark(EdgeRef e, double pos) {
    if (e.poly < 0 || e.poly >= polygon_count() || e.side < 0 || e.side >= poly_sides_[e.poly])
        throw std::invalid_argument("add_mark: side out of range");
    if (!(pos > 0.0 && pos < 1.0)) throw std::invalid_argument("add_mark: position must be in (0,1)");
    marks_.push_back({e, pos});
    return static_cast<int>(marks_.size()) - 1;
}

int PolygonalSurface::add_chord(int a, int b) {
    if (a < 0 || b < 0 || a >= mark_count() || b >= mark_count() || a == b)
        throw std::invalid_argument("add_chord: bad mark ids");
    if (marks_[a].e.poly != marks_[b].e.poly)
        throw MalformedDiagram("add_chord: endpoints in different polygons");
    chords_.emplace_back(a, b);
    return static_cast<int>(chords_.size()) - 1;
}

void PolygonalSurface::add_floating_circles(int poly, int count) {
    if (poly < 0 || poly >= polygon_count())
        throw std::invalid_argument("add_floating_circles: polygon out of range");
    floating_[poly] += count;
}

int PolygonalSurface::floating_circles() const {
    int n = 0;
    for (int f : floating_) n += f;
    return n;
}

std::vector<int> PolygonalSurface::marks_on_side(EdgeRef e) const {
    std::vector<int> ids;
    for (int i = 0; i < mark_count(); ++i)
        if (marks_[i].e == e) ids.push_back(i);
    std::sort(ids.begin(), ids.end(),
              [this](int x, int y) { return marks_[x].pos < marks_[y].pos; });
    return ids;
}

std::vector<int> PolygonalSurface::mark_partner() const {
    std::vector<int> partner(mark_count(), -1);
    for (auto& [a, b] : pairings_) {
        auto ma = marks_on_side(a);
        auto mb = marks_on_side(b);
        if (ma.size() != mb.size())
            throw MalformedDiagram("mark counts differ across a gluing");
        for (size_t i = 0; i < ma.size(); ++i) {
            partner[ma[i]] = mb[mb.size() - 1 - i];
            partner[mb[mb.size() - 1 - i]] = ma[i];
        }
    }
    return partner;
}

namespace {

// linear boundary coordinate inside one polygon: side + position
double bkey(const EdgePos& p) { return p.e.side + p.pos; }

bool cyclic_between(double x, double lo, double hi) {
    // is x in the cyclic-open interval (lo, hi)?
    if (lo < hi) return x > lo && x < hi;
    return x > lo || x < hi;
}

}  // namespace

void PolygonalSurface::validate() const {
    // pairing is a matching on sides
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : pairings_)
        for (EdgeRef e : {a, b})
            if (!seen.insert({e.poly, e.side}).second)
                throw MalformedDiagram("validate: side in two pairings");
    // marks distinct per side
    for (int p = 0; p < polygon_count(); ++p)
        for (int s = 0; s < poly_sides_[p]; ++s) {
            auto ids = marks_on_side({p, s});
            for (size_t i = 1; i < ids.size(); ++i)
                if (marks_[ids[i]].pos <= marks_[ids[i - 1]].pos)
                    throw MalformedDiagram("validate: coincident marks");
        }
    mark_partner();  // throws on count mismatch
    // every mark on exactly one chord
    std::vector<int> deg(mark_count(), 0);
    for (auto [a, b] : chords_) {
        deg[a]++;
        deg[b]++;
    }
    for (int m = 0; m < mark_count(); ++m)
        if (deg[m] != 1) throw MalformedDiagram("validate: mark not on exactly one chord");
    // chords pairwise non-crossing within each polygon
    for (size_t i = 0; i < chords_.size(); ++i)
        for (size_t j = i + 1; j < chords_.size(); ++j) {
            auto [a, b] = chords_[i];
            auto [c, d] = chords_[j];
            if (marks_[a].e.poly != marks_[c].e.poly) continue;
            double ka = bkey(marks_[a]), kb = bkey(marks_[b]);
            double kc = bkey(marks_[c]), kd = bkey(marks_[d]);
            bool c_in = cyclic_between(kc, ka, kb);
            bool d_in = cyclic_between(kd, ka, kb);
            if (c_in != d_in) throw MalformedDiagram("validate: crossing chords in a polygon");
        }
}

int PolygonalSurface::euler_characteristic() const {
    // corner c of polygon p sits at the start of side c
    std::vector<int> base(polygon_count() + 1, 0);
    for (int p = 0; p < polygon_count(); ++p) base[p + 1] = base[p] + poly_sides_[p];
    UF uf(base.back());
    auto corner = [&](int poly, int c) { return base[poly] + ((c % poly_sides_[poly]) + poly_sides_[poly]) % poly_sides_[poly]; };
    for (auto& [a, b] : pairings_) {
        uf.unite(corner(a.poly, a.side), corner(b.poly, b.side + 1));
        uf.unite(corner(a.poly, a.side + 1), corner(b.poly, b.side));
    }
    std::set<int> verts;
    for (int v = 0; v < base.back(); ++v) verts.insert(uf.find(v));
    int edges = 0;
    for (int p = 0; p < polygon_count(); ++p) edges += poly_sides_[p];
    edges -= static_cast<int>(pairings_.size());
    return static_cast<int>(verts.size()) - edges + polygon_count();
}

int PolygonalSurface::boundary_circle_count() const {
    std::set<std::pair<int, int>> free_sides;
    for (int p = 0; p < polygon_count(); ++p)
        for (int s = 0; s < poly_sides_[p]; ++s)
            if (is_free({p, s})) free_sides.insert({p, s});
    auto next_free = [&](EdgeRef e) {
        EdgeRef t{e.poly, (e.side + 1) % poly_sides_[e.poly]};
        while (!is_free(t)) {
            EdgeRef q = *partner(t);
            t = {q.poly, (q.side + 1) % poly_sides_[q.poly]};
        }
        return t;
    };
    int circles = 0;
    std::set<std::pair<int, int>> visited;
    for (auto [p, s] : free_sides) {
        if (visited.count({p, s})) continue;
        circles++;
        EdgeRef e{p, s};
        while (!visited.count({e.poly, e.side})) {
            visited.insert({e.poly, e.side});
            e = next_free(e);
        }
    }
    return circles;
}

std::vector<EdgeRef> PolygonalSurface::boundary_circle_of(EdgeRef start) const {
    if (!is_free(start)) throw std::invalid_argument("boundary_circle_of: side is not free");
    auto next_free = [&](EdgeRef e) {
        EdgeRef t{e.poly, (e.side + 1) % poly_sides_[e.poly]};
        while (!is_free(t)) {
            EdgeRef q = *partner(t);
            t = {q.poly, (q.side + 1) % poly_sides_[q.poly]};
        }
        return t;
    };
    std::vector<EdgeRef> cycle;
    EdgeRef e = start;
    do {
        cycle.push_back(e);
        e = next_free(e);
    } while (!(e == start));
    return cycle;
}

std::vector<int> PolygonalSurface::polygon_components() const {
    UF uf(polygon_count());
    for (auto& [a, b] : pairings_) uf.unite(a.poly, b.poly);
    std::vector<int> out(polygon_count());
    std::map<int, int> relabel;
    for (int p = 0; p < polygon_count(); ++p) {
        int r = uf.find(p);
        auto it = relabel.find(r);
        if (it == relabel.end()) it = relabel.emplace(r, static_cast<int>(relabel.size())).first;
        out[p] = it->second;
    }
    return out;
}

std::vector<int> PolygonalSurface::chord_component_ids(std::vector<char>* closed_flags) const {
    auto partner = mark_partner();
    UF uf(mark_count());
    for (int m = 0; m < mark_count(); ++m)
        if (partner[m] >= 0) uf.unite(m, partner[m]);
    for (auto [a, b] : chords_) uf.unite(a, b);
    std::vector<char> open(mark_count(), 0);
    for (int m = 0; m < mark_count(); ++m)
        if (partner[m] < 0) open[uf.find(m)] = 1;
    std::vector<int> ids(chords_.size());
    if (closed_flags) closed_flags->assign(chords_.size(), 0);
    for (size_t c = 0; c < chords_.size(); ++c) {
        ids[c] = uf.find(chords_[c].first);
        if (closed_flags) (*closed_flags)[c] = !open[ids[c]];
    }
    return ids;
}

PolygonalSurface::Counts PolygonalSurface::count_dividing_components() const {
    auto partner = mark_partner();
    UF uf(mark_count());
    for (int m = 0; m < mark_count(); ++m)
        if (partner[m] >= 0) uf.unite(m, partner[m]);
    for (auto [a, b] : chords_) uf.unite(a, b);
    std::vector<char> open(mark_count(), 0);
    for (int m = 0; m < mark_count(); ++m)
        if (partner[m] < 0) open[uf.find(m)] = 1;
    Counts out;
    std::set<int> seen;
    for (int m = 0; m < mark_count(); ++m) {
        int r = uf.find(m);
        if (!seen.insert(r).second) continue;
        if (open[r])
            out.arcs++;
        else
            out.closed++;
    }
    out.closed += floating_circles();
    return out;
}

// ---------------------------------------------------------------------------
// face decomposition: cut the complex along (a subset of) the dividing set

class FaceComplex {
public:
    // cut_chords empty => cut along every chord
    FaceComplex(const PolygonalSurface& s, const std::set<int>* cut_chords = nullptr)
        : s_(s) {
        std::set<int> cut;
        if (cut_chords)
            cut = *cut_chords;
        else
            for (int c = 0; c < s.chord_count(); ++c) cut.insert(c);

        // initial face per polygon: segs between consecutive marks on each side
        for (int p = 0; p < s.polygon_count(); ++p) {
            Face f;
            for (int side = 0; side < s.side_count(p); ++side) {
                auto ids = s.marks_on_side({p, side});
                for (size_t g = 0; g <= ids.size(); ++g)
                    f.items.push_back(Item{Item::Seg, {p, side}, static_cast<int>(g), -1});
            }
            faces_.push_back(std::move(f));
        }
        // split along every chord (cut or not; uncut copies get re-glued below)
        for (int c = 0; c < s.chord_count(); ++c) split_chord(c);

        // region gluing: seg pairs across side gluings, plus both copies of
        // every uncut chord
        locate_items();
        UF uf(static_cast<int>(faces_.size()));
        for (auto& [a, b] : pairings()) {
            int ka = static_cast<int>(s.marks_on_side(a).size());
            for (int g = 0; g <= ka; ++g) {
                auto fa = find_item(Item{Item::Seg, a, g, -1});
                auto fb = find_item(Item{Item::Seg, b, ka - g, -1});
                uf.unite(fa.first, fb.first);
            }
        }
        for (int c = 0; c < s.chord_count(); ++c)
            if (!cut.count(c)) {
                auto f0 = find_item(Item{Item::Chord, {}, 0, 2 * c});
                auto f1 = find_item(Item{Item::Chord, {}, 0, 2 * c + 1});
                uf.unite(f0.first, f1.first);
            }
        region_of_.resize(faces_.size());
        std::map<int, int> relabel;
        for (size_t f = 0; f < faces_.size(); ++f) {
            int r = uf.find(static_cast<int>(f));
            auto it = relabel.find(r);
            if (it == relabel.end()) it = relabel.emplace(r, static_cast<int>(relabel.size())).first;
            region_of_[f] = it->second;
        }
        region_count_ = static_cast<int>(relabel.size());
        cut_ = std::move(cut);
    }

    int region_count() const { return region_count_; }
    int region_of_face(int f) const { return region_of_[f]; }

    int region_of_chord_copy(int chord, int copy) const {
        return region_of_[find_item(Item{Item::Chord, {}, 0, 2 * chord + copy}).first];
    }

    struct RegionInfo {
        int chi;
        bool has_free = false;
        std::set<int> cut_chords_on_boundary;  // chord ids (cut copies)
        int polygons_touched = 0;
    };

    std::vector<RegionInfo> regions() const {
        // vertices: face corners between consecutive items, glued across seg pairs
        int total = 0;
        std::vector<int> fbase(faces_.size() + 1, 0);
        for (size_t f = 0; f < faces_.size(); ++f) {
            fbase[f + 1] = fbase[f] + static_cast<int>(faces_[f].items.size());
            total = fbase[f + 1];
        }
        // corner k of face f = vertex before item k
        UF uf(total);
        auto corner = [&](int f, int k) {
            int n = static_cast<int>(faces_[f].items.size());
            return fbase[f] + ((k % n) + n) % n;
        };
        for (auto& [a, b] : pairings()) {
            int ka = static_cast<int>(s_.marks_on_side(a).size());
            for (int g = 0; g <= ka; ++g) {
                auto [fa, ia] = find_item(Item{Item::Seg, a, g, -1});
                auto [fb, ib] = find_item(Item{Item::Seg, b, ka - g, -1});
                // glued reversed: start(a-seg) ~ end(b-seg), end(a-seg) ~ start(b-seg)
                uf.unite(corner(fa, ia), corner(fb, ib + 1));
                uf.unite(corner(fa, ia + 1), corner(fb, ib));
            }
        }
        for (int c = 0; c < s_.chord_count(); ++c)
            if (!cut_.count(c)) {
                auto [f0, i0] = find_item(Item{Item::Chord, {}, 0, 2 * c});
                auto [f1, i1] = find_item(Item{Item::Chord, {}, 0, 2 * c + 1});
                uf.unite(corner(f0, i0), corner(f1, i1 + 1));
                uf.unite(corner(f0, i0 + 1), corner(f1, i1));
            }
        std::vector<RegionInfo> out(region_count_);
        std::vector<std::set<int>> verts(region_count_);
        std::vector<int> edges(region_count_, 0), fcount(region_count_, 0);
        std::vector<std::set<int>> polys(region_count_);
        for (size_t f = 0; f < faces_.size(); ++f) {
            int r = region_of_[f];
            fcount[r]++;
            for (size_t k = 0; k < faces_[f].items.size(); ++k) {
                verts[r].insert(uf.find(corner(static_cast<int>(f), static_cast<int>(k))));
                const Item& it = faces_[f].items[k];
                if (it.kind == Item::Seg) {
                    polys[r].insert(it.side.poly);
                    if (s_.is_free(it.side)) {
                        out[r].has_free = true;
                        edges[r] += 2;  // counted once: free segs appear once; use 2 then halve
                    } else {
                        edges[r] += 1;  // each glued pair contributes two halves
                    }
                } else {
                    int chord = it.copy / 2;
                    if (cut_.count(chord)) {
                        out[r].cut_chords_on_boundary.insert(chord);
                        edges[r] += 2;
                    } else {
                        edges[r] += 1;
                    }
                }
            }
        }
        for (int r = 0; r < region_count_; ++r) {
            out[r].chi = static_cast<int>(verts[r].size()) - edges[r] / 2 + fcount[r];
            out[r].polygons_touched = static_cast<int>(polys[r].size());
        }
        return out;
    }

private:
    struct Item {
        enum Kind { Seg, Chord } kind;
        EdgeRef side;  // for Seg
        int gap;       // for Seg: 0..(marks on side)
        int copy;      // for Chord: 2*chord + copyindex
        bool operator==(const Item& o) const {
            if (kind != o.kind) return false;
            if (kind == Seg) return side == o.side && gap == o.gap;
            return copy == o.copy;
        }
    };
    struct Face {
        std::vector<Item> items;
    };

    const std::vector<std::pair<EdgeRef, EdgeRef>>& pairings() const { return s_.pairings_; }

    void split_chord(int c) {
        auto [m1, m2] = s_.chords_[c];
        // boundary point of mark m lies between seg(gap j) and seg(gap j+1)
        auto locate = [&](int m) {
            EdgeRef e = s_.marks_[m].e;
            auto ids = s_.marks_on_side(e);
            int j = static_cast<int>(std::find(ids.begin(), ids.end(), m) - ids.begin());
            return std::pair<Item, Item>{Item{Item::Seg, e, j, -1}, Item{Item::Seg, e, j + 1, -1}};
        };
        auto [before1, after1] = locate(m1);
        auto [before2, after2] = locate(m2);
        // find the face holding both split points
        for (size_t f = 0; f < faces_.size(); ++f) {
            auto& items = faces_[f].items;
            int i1 = -1, i2 = -1;
            for (size_t k = 0; k < items.size(); ++k) {
                size_t nk = (k + 1) % items.size();
                if (items[k] == before1 && items[nk] == after1) i1 = static_cast<int>(k);
                if (items[k] == before2 && items[nk] == after2) i2 = static_cast<int>(k);
            }
            if (i1 < 0 || i2 < 0) continue;
            if (i1 == i2) throw MalformedDiagram("FaceComplex: degenerate chord");
            int n = static_cast<int>(items.size());
            Face f1, f2;
            for (int k = (i1 + 1) % n; ; k = (k + 1) % n) {
                f1.items.push_back(items[k]);
                if (k == i2) break;
            }
            f1.items.push_back(Item{Item::Chord, {}, 0, 2 * c});
            for (int k = (i2 + 1) % n; ; k = (k + 1) % n) {
                f2.items.push_back(items[k]);
                if (k == i1) break;
            }
            f2.items.push_back(Item{Item::Chord, {}, 0, 2 * c + 1});
            faces_[f] = std::move(f1);
            faces_.push_back(std::move(f2));
            return;
        }
        throw MalformedDiagram("FaceComplex: chord endpoints not on one face (crossing chords?)");
    }

    void locate_items() {
        index_.clear();
        for (size_t f = 0; f < faces_.size(); ++f)
            for (size_t k = 0; k < faces_[f].items.size(); ++k) {
                const Item& it = faces_[f].items[k];
                if (it.kind == Item::Seg)
                    index_[{0, it.side.poly, it.side.side, it.gap}] = {static_cast<int>(f),
                                                                      static_cast<int>(k)};
                else
                    index_[{1, it.copy, 0, 0}] = {static_cast<int>(f), static_cast<int>(k)};
            }
    }

    std::pair<int, int> find_item(const Item& it) const {
        auto key = it.kind == Item::Seg
                       ? std::array<int, 4>{0, it.side.poly, it.side.side, it.gap}
                       : std::array<int, 4>{1, it.copy, 0, 0};
        auto f = index_.find(key);
        if (f == index_.end()) throw std::logic_error("FaceComplex: item not found");
        return f->second;
    }

    const PolygonalSurface& s_;
    std::vector<Face> faces_;
    std::vector<int> region_of_;
    int region_count_ = 0;
    std::set<int> cut_;
    std::map<std::array<int, 4>, std::pair<int, int>> index_;
};

bool PolygonalSurface::has_trivial_closed_curve() const {
    if (floating_circles() > 0) return true;
    if (chords_.empty()) return false;
    std::vector<char> closed;
    auto comp = chord_component_ids(&closed);
    FaceComplex fc(*this);
    for (auto& r : fc.regions()) {
        if (r.chi != 1 || r.has_free) continue;
        if (r.cut_chords_on_boundary.empty()) continue;
        std::set<int> comps;
        bool all_closed = true;
        for (int c : r.cut_chords_on_boundary) {
            comps.insert(comp[c]);
            if (!closed[c]) all_closed = false;
        }
        if (comps.size() == 1 && all_closed) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

int twisting_number(const CurveOnSurface& c, const PolygonalSurface& s) {
    int crossings = 0;
    for (auto& st : c.steps) {
        double kin = bkey(st.in), kout = bkey(st.out);
        for (int ch = 0; ch < s.chord_count(); ++ch) {
            auto [a, b] = s.chord(ch);
            if (s.mark(a).e.poly != st.poly) continue;
            double ka = bkey(s.mark(a)), kb = bkey(s.mark(b));
            bool a_in = cyclic_between(ka, kin, kout);
            bool b_in = cyclic_between(kb, kin, kout);
            if (a_in != b_in) crossings++;
        }
    }
    if (crossings % 2 != 0)
        throw MalformedDiagram("twisting_number: odd crossing count (dividing sets separate)");
    return -crossings / 2;
}

// ---------------------------------------------------------------------------
// bypass rewrite along a corridor

namespace {

struct BondSpec {
    int from_site, from_end;  // end: 0 = b, 1 = t
    int to_site, to_end;
    int lane;
};

}  // namespace

PolygonalSurface apply_bypass(const PolygonalSurface& s, const SurfaceArc& m) {
    PolygonalSurface out = s;
    if (m.polys.empty() || m.crossings.size() + 1 != m.polys.size())
        throw std::invalid_argument("apply_bypass: corridor shape mismatch");
    if (m.site2_poly_index < 0 || m.site2_poly_index >= static_cast<int>(m.polys.size()))
        throw std::invalid_argument("apply_bypass: site 2 index out of range");

    // site corridor positions (crossing i lies between positions i-0.5 and i+0.5)
    std::array<double, 3> spos = {-0.5, m.site2_poly_index - 0.5,
                                  static_cast<double>(m.polys.size()) - 1.5};
    std::array<int, 3> spoly = {m.polys.front(), m.polys[m.site2_poly_index], m.polys.back()};

    // validate sites and find shared chords
    for (int i = 0; i < 3; ++i) {
        const ArcSite& st = m.sites[i];
        if (st.chord < 0 || st.chord >= s.chord_count())
            throw std::invalid_argument("apply_bypass: bad chord id");
        auto [a, b] = s.chord(st.chord);
        if (st.b_mark != a && st.b_mark != b)
            throw std::invalid_argument("apply_bypass: b_mark not on chord");
        if (s.mark(a).e.poly != spoly[i])
            throw std::invalid_argument("apply_bypass: site chord not in corridor polygon");
    }
    if (m.sites[0].chord == m.sites[1].chord && m.sites[1].chord == m.sites[2].chord)
        throw MalformedDiagram("apply_bypass: three sites on one strand segment");
    int shared_a = -1, shared_b = -1;  // site indices sharing a chord
    for (int i = 0; i < 3 && shared_a < 0; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (m.sites[i].chord == m.sites[j].chord) {
                if (m.sites[i].b_mark == m.sites[j].b_mark)
                    throw MalformedDiagram("apply_bypass: double cut with equal b sides");
                shared_a = i;
                shared_b = j;
                break;
            }

    // lane = signed offset across the corridor, positive toward the t side;
    // the through bond runs at the center, each short bond hugs its own side
    std::vector<BondSpec> bonds;
    if (m.dig) {
        bonds = {{0, 1, 1, 1, +1}, {1, 0, 2, 0, -1}, {0, 0, 2, 1, 0}};
    } else {
        bonds = {{0, 0, 1, 0, -1}, {1, 1, 2, 1, +1}, {0, 1, 2, 0, 0}};
    }

    // attach-point lookup: real mark id, or -1 for the middle of a shared chord
    auto attach_mark = [&](int site, int end) -> int {
        const ArcSite& st = m.sites[site];
        auto [a, b] = s.chord(st.chord);
        int other = (st.b_mark == a) ? b : a;
        bool shared = (site == shared_a || site == shared_b);
        if (st.b_is_middle && !shared)
            throw std::invalid_argument("apply_bypass: b_is_middle on a single-cut site");
        bool end_is_fragment = st.b_is_middle ? (end == 1) : (end == 0);
        if (end_is_fragment) return st.b_mark;
        return shared ? -1 : other;
    };

    // per-crossing offset scale
    auto delta_for = [&](int ci) {
        const EdgePos& cp = m.crossings[ci];
        double d = std::min(cp.pos, 1.0 - cp.pos);
        for (int mm = 0; mm < s.mark_count(); ++mm)
            if (s.mark(mm).e == cp.e) d = std::min(d, std::fabs(s.mark(mm).pos - cp.pos));
        for (size_t cj = 0; cj < m.crossings.size(); ++cj)
            if (cj != static_cast<size_t>(ci) && m.crossings[cj].e == cp.e)
                d = std::min(d, std::fabs(m.crossings[cj].pos - cp.pos));
        if (d <= 0) throw MalformedDiagram("apply_bypass: corridor crossing hits a mark");
        return d / 10.0;
    };

    std::vector<int> middle_ends;  // accumulated connection marks for the shared middle
    int middle_poly = shared_a >= 0 ? spoly[shared_a] : -1;
    bool middle_loop_closed = false;

    for (const BondSpec& bs : bonds) {
        int am = attach_mark(bs.from_site, bs.from_end);
        int bm = attach_mark(bs.to_site, bs.to_end);
        double lo = spos[bs.from_site], hi = spos[bs.to_site];
        // crossings strictly inside the corridor interval
        std::vector<int> xs;
        for (size_t ci = 0; ci < m.crossings.size(); ++ci)
            if (ci > lo && ci < hi) xs.push_back(static_cast<int>(ci));
        if (am < 0 && bm < 0) {
            // bond joins the middle fragment to itself
            if (xs.empty()) {
                out.add_floating_circles(middle_poly);
                middle_loop_closed = true;
                continue;
            }
            // route out and back; the middle fragment closes the circuit
            int first_exit = -1, prev_entry = -1;
            for (int ci : xs) {
                double d = delta_for(ci);
                const EdgePos& cp = m.crossings[ci];
                EdgeRef pe = *s.partner(cp.e);
                int ex = out.add_mark(cp.e, cp.pos + bs.lane * d);
                int en = out.add_mark(pe, 1.0 - (cp.pos + bs.lane * d));
                if (first_exit < 0)
                    first_exit = ex;
                else
                    out.add_chord(prev_entry, ex);
                prev_entry = en;
            }
            out.add_chord(prev_entry, first_exit);
            middle_loop_closed = true;
            continue;
        }
        int cur = am;  // current loose end (mark id or -1 when starting at the middle)
        for (int ci : xs) {
            double d = delta_for(ci);
            const EdgePos& cp = m.crossings[ci];
            EdgeRef pe = *s.partner(cp.e);
            int ex = out.add_mark(cp.e, cp.pos + bs.lane * d);
            int en = out.add_mark(pe, 1.0 - (cp.pos + bs.lane * d));
            if (cur >= 0)
                out.add_chord(cur, ex);
            else
                middle_ends.push_back(ex);
            cur = en;
        }
        if (bm >= 0 && cur >= 0)
            out.add_chord(cur, bm);
        else if (bm >= 0 && cur < 0)
            middle_ends.push_back(bm);
        else if (bm < 0 && cur >= 0)
            middle_ends.push_back(cur);
        else
            throw std::logic_error("apply_bypass: unreachable");
    }

    if (shared_a >= 0 && !middle_loop_closed) {
        if (middle_ends.size() != 2)
            throw std::logic_error("apply_bypass: middle fragment needs two connections");
        out.add_chord(middle_ends[0], middle_ends[1]);
    }

    // remove the cut chords (descending ids keep indices stable)
    std::vector<int> cut = {m.sites[0].chord, m.sites[1].chord, m.sites[2].chord};
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    for (auto it = cut.rbegin(); it != cut.rend(); ++it)
        out.chords_.erase(out.chords_.begin() + *it);

    out.validate();
    return out;
}

bool is_trivial_move(const PolygonalSurface& s, const SurfaceArc& m) {
    PolygonalSurface t = apply_bypass(s, m);
    return t.canonical_signature() == s.canonical_signature();
}

// ---------------------------------------------------------------------------
// canonical signature with bigon reduction

namespace {

struct Strands {
    // mutable copy of the dividing-set data for reduction
    std::vector<EdgePos> marks;
    std::vector<char> alive;
    std::vector<std::pair<int, int>> chords;
    std::vector<char> chord_alive;
    int floating = 0;
    const PolygonalSurface* s;

    std::vector<int> side_marks(EdgeRef e) const {
        std::vector<int> ids;
        for (size_t i = 0; i < marks.size(); ++i)
            if (alive[i] && marks[i].e == e) ids.push_back(static_cast<int>(i));
        std::sort(ids.begin(), ids.end(),
                  [this](int x, int y) { return marks[x].pos < marks[y].pos; });
        return ids;
    }

    int partner_of(int m) const {
        auto p = s->partner(marks[m].e);
        if (!p) return -1;
        auto a = side_marks(marks[m].e);
        auto b = side_marks(*p);
        int j = static_cast<int>(std::find(a.begin(), a.end(), m) - a.begin());
        return b[b.size() - 1 - j];
    }

    int chord_of(int m) const {
        for (size_t c = 0; c < chords.size(); ++c)
            if (chord_alive[c] && (chords[c].first == m || chords[c].second == m))
                return static_cast<int>(c);
        return -1;
    }

    bool reduce_once() {
        for (size_t c = 0; c < chords.size(); ++c) {
            if (!chord_alive[c]) continue;
            auto [m1, m2] = chords[c];
            if (!(marks[m1].e == marks[m2].e)) continue;
            if (!s->partner(marks[m1].e)) continue;  // free side: an honest boundary-parallel arc
            auto ids = side_marks(marks[m1].e);
            int i1 = static_cast<int>(std::find(ids.begin(), ids.end(), m1) - ids.begin());
            int i2 = static_cast<int>(std::find(ids.begin(), ids.end(), m2) - ids.begin());
            if (std::abs(i1 - i2) != 1) continue;  // not innermost
            int p1 = partner_of(m1), p2 = partner_of(m2);
            int c1 = chord_of(p1), c2 = chord_of(p2);
            if (c1 == static_cast<int>(c)) continue;  // cannot happen, guard anyway
            if (c1 == c2) {
                // two-crossing closed curve: becomes a floating circle
                floating++;
                chord_alive[c] = chord_alive[c1] = 0;
                alive[m1] = alive[m2] = alive[p1] = alive[p2] = 0;
                return true;
            }
            int x = chords[c1].first == p1 ? chords[c1].second : chords[c1].first;
            int y = chords[c2].first == p2 ? chords[c2].second : chords[c2].first;
            chord_alive[c] = chord_alive[c1] = chord_alive[c2] = 0;
            alive[m1] = alive[m2] = alive[p1] = alive[p2] = 0;
            chords.emplace_back(x, y);
            chord_alive.push_back(1);
            return true;
        }
        return false;
    }
};

}  // namespace

std::string PolygonalSurface::canonical_signature() const {
    Strands w;
    w.s = this;
    w.marks = marks_;
    w.alive.assign(marks_.size(), 1);
    w.chords = chords_;
    w.chord_alive.assign(chords_.size(), 1);
    w.floating = floating_circles();
    while (w.reduce_once()) {
    }

    // walk components; tokens = gluing crossings with direction
    auto pairing_token = [&](int mark_from) {
        EdgeRef e = w.marks[mark_from].e;
        int p = pairing_of(e);
        int dir = pairings_[p].first == e ? 0 : 1;
        return std::pair<int, int>{p, dir};
    };
    auto endpoint_token = [&](int mark) {
        EdgeRef e = w.marks[mark].e;
        auto ids = w.side_marks(e);
        int ord = static_cast<int>(std::find(ids.begin(), ids.end(), mark) - ids.begin());
        std::ostringstream os;
        os << "e" << e.poly << "." << e.side << "." << ord;
        return os.str();
    };

    std::vector<char> chord_seen(w.chords.size(), 0);
    std::vector<std::string> comps;

    auto tok_str = [](std::pair<int, int> t) {
        return "g" + std::to_string(t.first) + (t.second ? "-" : "+");
    };
    auto flip = [](std::pair<int, int> t) {
        return std::pair<int, int>{t.first, 1 - t.second};
    };

    // arcs first: start from free-side marks
    for (size_t c0 = 0; c0 < w.chords.size(); ++c0) {
        if (!w.chord_alive[c0] || chord_seen[c0]) continue;
        auto [a0, b0] = w.chords[c0];
        int start = -1;
        if (!partner(w.marks[a0].e))
            start = a0;
        else if (!partner(w.marks[b0].e))
            start = b0;
        if (start < 0) continue;
        // walk the arc
        std::vector<std::pair<int, int>> toks;
        int cur_mark = start;
        int end_mark = -1;
        int c = static_cast<int>(c0);
        while (true) {
            chord_seen[c] = 1;
            int other = w.chords[c].first == cur_mark ? w.chords[c].second : w.chords[c].first;
            if (!partner(w.marks[other].e)) {
                end_mark = other;
                break;
            }
            toks.push_back(pairing_token(other));
            int nxt = w.partner_of(other);
            cur_mark = nxt;
            c = w.chord_of(nxt);
        }
        std::string fwd = "A:" + endpoint_token(start);
        for (auto& t : toks) fwd += "," + tok_str(t);
        fwd += "," + endpoint_token(end_mark);
        std::string bwd = "A:" + endpoint_token(end_mark);
        for (auto it = toks.rbegin(); it != toks.rend(); ++it) bwd += "," + tok_str(flip(*it));
        bwd += "," + endpoint_token(start);
        comps.push_back(std::min(fwd, bwd));
    }
    // closed components
    for (size_t c0 = 0; c0 < w.chords.size(); ++c0) {
        if (!w.chord_alive[c0] || chord_seen[c0]) continue;
        std::vector<std::pair<int, int>> toks;
        int c = static_cast<int>(c0);
        int cur_mark = w.chords[c0].first;
        while (!chord_seen[c]) {
            chord_seen[c] = 1;
            int other = w.chords[c].first == cur_mark ? w.chords[c].second : w.chords[c].first;
            toks.push_back(pairing_token(other));
            cur_mark = w.partner_of(other);
            c = w.chord_of(cur_mark);
        }
        // minimize over rotations and the two directions
        std::string best;
        int n = static_cast<int>(toks.size());
        for (int dir = 0; dir < 2; ++dir) {
            for (int r = 0; r < n; ++r) {
                std::string cand = "C:";
                for (int k = 0; k < n; ++k) {
                    auto t = dir == 0 ? toks[(r + k) % n] : flip(toks[(r - k % n + 2 * n) % n]);
                    cand += tok_str(t);
                }
                if (best.empty() || cand < best) best = cand;
            }
        }
        comps.push_back(best);
    }
    for (int i = 0; i < w.floating; ++i) comps.push_back("O");
    std::sort(comps.begin(), comps.end());
    std::string sig;
    for (auto& c : comps) sig += c + ";";
    return sig;
}

// ---------------------------------------------------------------------------
// folding

std::pair<PolygonalSurface, SurfaceArc> fold(const PolygonalSurface& s, const CurveOnSurface& c) {
    if (!c.closed || c.steps.empty())
        throw std::invalid_argument("fold: need a closed curve");
    if (twisting_number(c, s) != 0)
        throw MalformedDiagram("fold: curve must be disjoint from the dividing set");

    PolygonalSurface out = s;
    int n = static_cast<int>(c.steps.size());

    // nonisolating check: cut along a single inserted copy of c; every
    // complementary region must meet the dividing set
    {
        PolygonalSurface probe = s;
        std::set<int> cut;
        std::vector<int> entry(n, -1), exit(n, -1);
        for (int i = 0; i < n; ++i) {
            const EdgePos& o = c.steps[i].out;
            exit[i] = probe.add_mark(o.e, o.pos);
            EdgeRef pe = *probe.partner(o.e);
            entry[(i + 1) % n] = probe.add_mark(pe, 1.0 - o.pos);
        }
        for (int i = 0; i < n; ++i)
            cut.insert(probe.add_chord(entry[i], exit[i]));
        probe.validate();
        FaceComplex fc(probe, &cut);
        std::vector<char> region_has_strand(fc.region_count(), 0);
        for (int ch = 0; ch < probe.chord_count(); ++ch)
            if (!cut.count(ch)) {
                region_has_strand[fc.region_of_chord_copy(ch, 0)] = 1;
                region_has_strand[fc.region_of_chord_copy(ch, 1)] = 1;
            }
        // floating circles also witness the dividing set; conservatively they
        // are not localized to a region, so only count them if there are no
        // regions missing strands anyway
        for (int r = 0; r < fc.region_count(); ++r)
            if (!region_has_strand[r] && probe.floating_circles() == 0)
                throw MalformedDiagram("fold: curve is isolating");
    }

    // insert the two parallel copies
    double delta = 1e-4;
    std::vector<int> entry_p(n), exit_p(n), entry_m(n), exit_m(n);
    for (int i = 0; i < n; ++i) {
        const EdgePos& o = c.steps[i].out;
        double d = std::min({o.pos, 1.0 - o.pos, delta});
        for (int mm = 0; mm < s.mark_count(); ++mm)
            if (s.mark(mm).e == o.e) d = std::min(d, std::fabs(s.mark(mm).pos - o.pos));
        d /= 10.0;
        EdgeRef pe = *out.partner(o.e);
        exit_p[i] = out.add_mark(o.e, o.pos + d);
        exit_m[i] = out.add_mark(o.e, o.pos - d);
        entry_p[(i + 1) % n] = out.add_mark(pe, 1.0 - (o.pos + d));
        entry_m[(i + 1) % n] = out.add_mark(pe, 1.0 - (o.pos - d));
    }
    int first_plus_chord = -1, first_minus_chord = -1;
    for (int i = 0; i < n; ++i) {
        int cp = out.add_chord(entry_p[i], exit_p[i]);
        int cm = out.add_chord(entry_m[i], exit_m[i]);
        if (i == 0) {
            first_plus_chord = cp;
            first_minus_chord = cm;
        }
    }
    out.validate();

    // the dig move realizing the fold: an arc from a neighboring strand across
    // the nearer inserted copy into the farther one.  Search the polygon of
    // step 0 for a strand chord with an endpoint on the step's out side; the
    // b sides all face that side so the corridor stays planar.
    const EdgePos& o0 = c.steps[0].out;
    for (int ch = 0; ch < s.chord_count(); ++ch) {
        auto [ca, cb] = s.chord(ch);
        int side_end = -1;
        if (s.mark(ca).e == o0.e)
            side_end = ca;
        else if (s.mark(cb).e == o0.e)
            side_end = cb;
        if (side_end < 0) continue;
        bool below = s.mark(side_end).pos < o0.pos;
        int near_chord = below ? first_minus_chord : first_plus_chord;
        int far_chord = below ? first_plus_chord : first_minus_chord;
        int near_b = below ? exit_m[0] : exit_p[0];
        int far_b = below ? exit_p[0] : exit_m[0];
        SurfaceArc mv;
        mv.sites = {ArcSite{ch, side_end}, ArcSite{near_chord, near_b},
                    ArcSite{far_chord, far_b}};
        mv.polys = {c.steps[0].poly};
        mv.crossings = {};
        mv.site2_poly_index = 0;
        mv.dig = true;
        return {out, mv};
    }
    throw MalformedDiagram("fold: no neighboring strand found for the dig witness");
}

}  // namespace ctop

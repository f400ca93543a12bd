#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctop/strand_graph.hpp"

namespace ctop {

struct EdgeRef {
    int poly;
    int side;
    bool operator==(const EdgeRef& o) const { return poly == o.poly && side == o.side; }
    bool operator<(const EdgeRef& o) const {
        return poly != o.poly ? poly < o.poly : side < o.side;
    }
};

struct EdgePos {
    EdgeRef e;
    double pos;  // in (0,1) along the side's own direction
};

/// Compact oriented surface as a polygon complex: polygons with sides either
/// free (manifold boundary) or glued in pairs with reversed orientation.  The
/// dividing set is carried as marks (strand crossings on sides, matched
/// across a gluing by reversed order) joined by chords inside polygons, plus
/// floating closed curves contained in a single polygon.  Strand ends are
/// exactly the marks on free sides.
class PolygonalSurface {
public:
    int add_polygon(int sides);
    void pair_sides(EdgeRef a, EdgeRef b);
    void unpair_sides(EdgeRef e);  // removes the pairing containing e
    int add_mark(EdgeRef e, double pos);
    int add_chord(int mark_a, int mark_b);
    void add_floating_circles(int poly, int count = 1);

    int polygon_count() const { return static_cast<int>(poly_sides_.size()); }
    int side_count(int poly) const { return poly_sides_[poly]; }
    bool is_free(EdgeRef e) const;
    std::optional<EdgeRef> partner(EdgeRef e) const;
    int mark_count() const { return static_cast<int>(marks_.size()); }
    int chord_count() const { return static_cast<int>(chords_.size()); }
    const std::pair<int, int>& chord(int id) const { return chords_[id]; }
    EdgePos mark(int id) const { return marks_[id]; }
    int floating_circles() const;
    int floating_circles_in(int poly) const { return floating_[poly]; }

    /// Structural invariants: pairing involution, matching mark counts on
    /// glued sides, every mark on exactly one chord, chords non-crossing
    /// inside each polygon.  Throws MalformedDiagram.
    void validate() const;

    int euler_characteristic() const;  // of the underlying surface
    int boundary_circle_count() const;
    /// Free sides of one boundary circle, in boundary-walk order starting
    /// from `start` (which must be free).
    std::vector<EdgeRef> boundary_circle_of(EdgeRef start) const;
    /// Connected-component id per polygon (components joined by pairings).
    std::vector<int> polygon_components() const;
    /// Public view of mark matching across gluings (-1 for free-side marks).
    std::vector<int> mark_partners() const { return mark_partner(); }
    /// Mark ids on one side, ordered by position.
    std::vector<int> side_marks(EdgeRef e) const { return marks_on_side(e); }

    struct Counts {
        int closed = 0;
        int arcs = 0;
    };
    /// Global dividing-set components, resolved across all gluings.
    Counts count_dividing_components() const;

    /// Giroux criterion probe: true iff some closed dividing curve bounds a
    /// disk.  Decided by cutting along the dividing set and looking for a
    /// complementary region with chi = 1 whose whole boundary is one closed
    /// strand (innermost trivial curve), or any floating circle.
    bool has_trivial_closed_curve() const;

    /// Canonical description of the dividing set up to combinatorial isotopy
    /// (bigon reduction across gluings, mark sliding).  Equal signatures mean
    /// isotopic dividing sets rel boundary ends.
    std::string canonical_signature() const;

    /// Strand component id for each chord (ids are arbitrary but consistent),
    /// plus whether that component is closed.
    std::vector<int> chord_component_ids(std::vector<char>* closed_flags = nullptr) const;

private:
    friend class FaceComplex;
    friend PolygonalSurface apply_bypass(const PolygonalSurface&, const struct SurfaceArc&);

    std::vector<int> poly_sides_;
    std::vector<std::pair<EdgeRef, EdgeRef>> pairings_;
    std::vector<EdgePos> marks_;
    std::vector<std::pair<int, int>> chords_;  // mark ids, same polygon
    std::vector<int> floating_;                // per polygon

    int pairing_of(EdgeRef e) const;  // -1 if free
    std::vector<int> mark_partner() const;
    std::vector<int> marks_on_side(EdgeRef e) const;  // ordered by position
};

/// Curve or properly embedded arc, written as polygon traversals.  Each step
/// enters and leaves a polygon at side positions; consecutive steps pass
/// through a gluing.  Arcs start and end on free sides; closed curves wrap.
struct CurveOnSurface {
    struct Step {
        int poly;
        EdgePos in;
        EdgePos out;
    };
    std::vector<Step> steps;
    bool closed = false;
};

/// tb / twisting relative to the surface framing: -(crossings with the
/// dividing set)/2.  Odd crossing counts are malformed (a dividing set
/// separates, so any curve meets it evenly).
int twisting_number(const CurveOnSurface& c, const PolygonalSurface& s);

/// Attaching arc for a bypass rewrite, in final position.  The corridor runs
/// from the site-1 crossing to the site-3 crossing through the listed
/// polygons; `crossings` are the side crossings between consecutive polygons.
/// Sites name the crossed chord and which end of it lies on the b side (the
/// side of the strand facing the arc's own half-disk).  Two sites may share a
/// chord (crossed twice) with distinct b ends.
struct ArcSite {
    int chord;
    int b_mark;               // the site's own end-fragment mark
    bool b_is_middle = false;  // shared chords only: middle fragment sits on
                               // the b side, so b_mark's fragment is the t end
};

struct SurfaceArc {
    std::array<ArcSite, 3> sites;
    std::vector<int> polys;           // corridor polygons, site 1 in front, site 3 in back
    std::vector<EdgePos> crossings;   // size = polys.size() - 1
    int site2_poly_index = 0;         // which corridor polygon holds site 2
    bool dig = true;
};

/// Bypass rewrite on a general surface: cut the three crossed strands at the
/// sites and reconnect along the corridor in the dig or attach pattern.  New
/// strand pieces that close up entirely inside the corridor become floating
/// circles.
PolygonalSurface apply_bypass(const PolygonalSurface& s, const SurfaceArc& m);

bool is_trivial_move(const PolygonalSurface& s, const SurfaceArc& m);

/// Folding along a closed nonisolating curve disjoint from the dividing set:
/// inserts two parallel closed dividing curves along c and returns the dig
/// move realizing the fold; applying the returned move with dig=false (the
/// obvious add) removes the pair again.
std::pair<PolygonalSurface, SurfaceArc> fold(const PolygonalSurface& s, const CurveOnSurface& c);

}  // namespace ctop

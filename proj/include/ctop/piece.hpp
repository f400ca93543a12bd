#pragma once

#include <string>
#include <vector>

#include "ctop/assembly.hpp"
#include "ctop/chord.hpp"
#include "ctop/surface.hpp"

namespace ctop {

/// Closed curve on a piece boundary given as glued edges: the curve runs
/// along the listed sides (one representative per glued pair).  Cutting the
/// piece along the disk it bounds frees both sides of every pair.
struct CutCurve {
    std::string name;
    std::vector<EdgeRef> edges;
};

/// One performed disk cut awaiting edge rounding.  Labels run 1..2n around
/// the positive freed circle in boundary-walk order; the negative circle
/// inherits labels through the former gluing, so both caps carry the same
/// chord diagram and rounding shifts that differ by one position.
struct PendingCut {
    std::string name;
    std::vector<EdgeRef> plus_sides;   // walk order around the + circle
    std::vector<EdgeRef> minus_sides;  // partners of plus_sides, same index
    std::vector<int> plus_marks;       // mark ids by label, walk order
    std::vector<int> minus_marks;      // former gluing partners, same label
    ChordDiagram cfg;
};

struct ManifoldPiece {
    std::string name;
    PolygonalSurface boundary;
    std::vector<PendingCut> pending;
    std::vector<std::string> history;
};

/// tb of a cut curve relative to the boundary framing: -(marks crossed)/2.
int curve_tb(const ManifoldPiece& p, const CutCurve& c);

/// Cuts the piece along the disk bounded by c, capping nothing yet: both
/// copies of the disk become free boundary circles with the dividing-set
/// endpoints sitting on the former corners.  cfg must have one point per
/// strand crossing of c.
ManifoldPiece cut_disk(const ManifoldPiece& p, const CutCurve& c, const ChordDiagram& cfg);

/// Smooths all recorded corners: glues a cap polygon onto each freed circle
/// carrying the cut's chord diagram.  The chord endpoints sit half a point
/// spacing off the strand ends, so the two copies pick up joins that differ
/// by one position net: shift 0 on positive copies and -1 on negative copies
/// in the shared labeling.  Euler characteristic grows by 2 per cut.
ManifoldPiece round_edges(const ManifoldPiece& p);

/// Undoes a cut before rounding: restores the original gluings.
ManifoldPiece reglue(const ManifoldPiece& p, int pending_index);

/// Assembly view of a fully cut piece (every handle severed, all components
/// balls): holes in pending order (+ copy then - copy), planar strands from
/// the surviving dividing arcs, untouched closed curves as base counts.
/// Cap index i of the returned assembly corresponds to pending[i/2].
SphereAssembly to_assembly(const ManifoldPiece& p);

}  // namespace ctop

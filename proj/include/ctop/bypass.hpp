#pragma once

#include <optional>
#include <string>

#include "ctop/chord.hpp"
#include "ctop/strand_graph.hpp"

namespace ctop {

/// Attaching arc in near-boundary position on a disk diagram: the arc runs
/// parallel to the boundary just inside it, crossing the three strands
/// incident to boundary points pos, pos+1, pos+2 (cyclically) near those
/// points.  This is the position the candidate-arc enumeration uses; every
/// rewrite-distinct arc on a disk cap arises this way.
struct DiskArc {
    int pos;   // 1-based boundary point where the arc starts
    bool dig;  // dig below (true) or attach above (false)
};

struct DiskRewrite {
    ChordDiagram diagram;  // the arcs that still reach the boundary
    int loops = 0;         // closed curves created on the disk
};

/// Apply the abstract bypass move along a near-boundary arc.  The three
/// crossed strands are cut at the crossing points and reconnected; all other
/// strands are unchanged.  A rewrite that traps a piece of strand away from
/// the boundary reports it in `loops`; a homotopically trivial closed curve
/// on a cutting disk makes the ambient structure overtwisted, so callers
/// treat loops > 0 as a dead state.
DiskRewrite apply_bypass(const ChordDiagram& d, const DiskArc& arc);

/// True iff the move leaves the canonical dividing set unchanged.
bool is_trivial_move(const ChordDiagram& d, const DiskArc& arc);

/// Arc literal: "arc on=A+ cross=(3,4,5)" names the three crossed strand
/// positions; only consecutive triples are accepted here.
std::string format_arc_literal(const std::string& surface, const DiskArc& arc, int points);
DiskArc parse_arc_literal(const std::string& text, int points, std::string* surface = nullptr);

}  // namespace ctop

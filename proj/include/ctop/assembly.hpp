#pragma once

#include <vector>

#include "ctop/chord.hpp"
#include "ctop/strand_graph.hpp"

namespace ctop {

/// Boundary sphere(s) of a handlebody cut along all compressing disks.  Each
/// disk leaves two holes (its positive and negative copy); hole points are the
/// crossings of the dividing set with the disk boundary, indexed 1..2n along
/// the disk boundary in a parameterization shared by both copies.  The planar
/// part records how the cut-open dividing set connects hole points; capping a
/// hole lays a disk configuration across it, and rounding the cut edge joins
/// cap crossing j to the planar strand at index j + shift (cyclically).
struct PointRef {
    int hole;
    int index;  // 1-based position along the hole boundary
    bool operator==(const PointRef& o) const { return hole == o.hole && index == o.index; }
};

struct Hole {
    int size;   // number of boundary crossings, = 2n of the capping diagram
    int shift;  // -1, 0 or +1: rounding offset for this copy's joins
    int ball;   // which ball of the cut-open manifold the hole lies on
};

class SphereAssembly {
public:
    SphereAssembly(std::vector<Hole> holes, std::vector<std::pair<PointRef, PointRef>> planar,
                   int balls = 1, std::vector<int> base_closed_per_ball = {});

    int balls() const { return balls_; }
    const std::vector<Hole>& holes() const { return holes_; }
    const std::vector<std::pair<PointRef, PointRef>>& planar() const { return planar_; }
    const std::vector<int>& base_closed() const { return base_closed_per_ball_; }

    /// Closed dividing curves per ball once every hole is capped with the
    /// given configuration and the cut edges are rounded.  Throws if a curve
    /// would cross between balls (an assembly construction error).
    std::vector<int> closed_counts(const std::vector<ChordDiagram>& caps) const;

    /// Allowability: every ball's boundary sphere carries exactly one
    /// dividing curve.
    bool allowable(const std::vector<ChordDiagram>& caps) const;

private:
    std::vector<Hole> holes_;
    std::vector<std::pair<PointRef, PointRef>> planar_;
    int balls_;
    std::vector<int> base_closed_per_ball_;  // closed planar curves missing every hole
};

}  // namespace ctop

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctop/chord.hpp"

namespace ctop {

/// Combinatorial 1-manifold: nodes are strand ends / crossing stubs, bonds are
/// strand segments.  Nodes have degree at most two; components are closed
/// curves (every node degree 2) or arcs.  Multi-bonds are allowed (a two-node
/// circle is two parallel bonds).
///
/// The three-site rewrite implements the abstract bypass moves: the attaching
/// arc crosses three strand segments; each segment is cut and the six ends are
/// reconnected.  With the six ends in cyclic order b1 b2 b3 t3 t2 t1 around
/// the attaching arc (b = the side holding `b_node`), the two planar
/// reconnections are
///
///   attach:  b1-b2, b3-t1, t3-t2
///   dig:     b1-t3, b2-b3, t1-t2
///
/// Attach and dig along the same sites are mutually inverse.
class StrandGraph {
public:
    int add_node();
    int add_nodes(int count);  // returns first id of a contiguous block
    int add_bond(int a, int b);

    int node_count() const { return static_cast<int>(degree_.size()); }
    int degree(int node) const { return degree_[node]; }

    struct Counts {
        int closed = 0;
        int arcs = 0;
    };
    Counts count() const;

    /// Representative node id per component, one entry per node.
    std::vector<int> component_reps() const;

    /// Closed-component count restricted to a node grouping (e.g. one count
    /// per ball of a multi-ball assembly).  group_of[node] >= 0; a component
    /// spanning two groups is an error.
    std::vector<int> closed_by_group(const std::vector<int>& group_of, int group_count) const;

    struct Site {
        int bond;    // segment crossed by the attaching arc
        int b_node;  // endpoint of that bond lying on the b-side fragment
    };

    /// Cut the three sites and reconnect.  Sites are ordered along the arc.
    /// Two sites may share a bond (the strand is crossed twice); three may not.
    void rewrite(const std::array<Site, 3>& sites, bool dig);

    const std::vector<std::pair<int, int>>& bonds() const { return bonds_; }

private:
    std::vector<int> degree_;
    std::vector<std::pair<int, int>> bonds_;  // (-1,-1) marks a removed bond
};

}  // namespace ctop

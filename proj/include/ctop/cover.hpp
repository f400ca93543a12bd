#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctop/assembly.hpp"
#include "ctop/scenarios.hpp"

namespace ctop {

/// Odd-sheeted cover of the half on the positive side of the splitting
/// annulus.  The cut-open half is a ball, so the cover handlebody cut along
/// all lifted compressing disks is m disjoint copies of that ball; the deck
/// structure lives entirely in how the lifted disks couple the copies.
/// Crossing the first handle from sheet j lands in first_perm[j], crossing
/// the second in second_perm[j].
struct CoverSpec {
    int n = 1;  // scale: the cover has 3^n sheets
    int sheets() const;
};

struct CoverModel {
    int m = 0;
    std::vector<int> first_perm;
    std::vector<int> second_perm;
    int surface_chi = 0;         // of the covering surface of the half
    int surface_boundaries = 0;  // its boundary circles
    // pieces left after cutting only along the lifted first disks; each is a
    // solid torus listing the sheets it spans
    std::vector<std::vector<int>> tori;
    int first_self_glued = -1;   // sheet carrying both copies of a first-disk lift
    int second_self_glued = -1;  // sheet carrying both copies of a second-disk lift
    SphereAssembly assembly;     // m balls, holes 4j..4j+3 = sheet j's
                                 // first+/first-/second+/second- holes
    // configurations of the candidate (non-product) class downstairs: the two
    // first-disk survivors and the two second-disk configurations they pair with
    std::vector<ChordDiagram> first_pair;
    std::vector<ChordDiagram> second_pair;
};

/// Builds the 3^n-sheeted cover.  The deck permutations are the dihedral
/// reflections x: j -> -j and y: j -> 1-j of Z_m; their product is an
/// m-cycle, which keeps the covering surface connected with one boundary
/// circle, and each is an involution with a single fixed sheet, which
/// reproduces the expected piece taxonomy: cutting along the first-disk
/// lifts leaves (m-1)/2 two-sheet solid tori and one one-sheet solid torus,
/// and exactly two sheets self-glue, one through a first-disk lift and one
/// through a second-disk lift.
CoverModel build_cover(const CoverSpec& spec);

/// One configuration per lifted disk, indexed by the sheet its positive
/// copy lies on.
struct CoverState {
    std::vector<ChordDiagram> first;
    std::vector<ChordDiagram> second;
};

std::vector<int> cover_closed_counts(const CoverModel& c, const CoverState& s);
bool cover_allowable(const CoverModel& c, const CoverState& s);

/// Closed dividing curves per solid torus of the model, capping the
/// first-disk lifts with the state's configurations and regluing the
/// second-disk cuts (point i rejoins point i; the copies share their
/// boundary parameterization).
std::vector<int> torus_closed_counts(const CoverModel& c, const CoverState& s);

/// Condition-3 transition on the cover: dig at `pos` on one copy of a
/// lifted disk (family 0 = first-disk lifts, 1 = second-disk lifts) and
/// require the dig-only recount to preserve every ball's curve count.
/// Source allowability is the caller's concern.  Failure reasons mirror
/// Classifier::transition.
std::optional<ChordDiagram> cover_transition(const CoverModel& c, const CoverState& s,
                                             int family, int lift, int copy, int pos,
                                             std::string* reason = nullptr);

/// Scenario "4.3": replays the covering-space checks at scale n.
ScenarioReport verify_cover(const CoverSpec& spec, int threads = 0);

}  // namespace ctop

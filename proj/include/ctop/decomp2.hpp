#pragma once

#include <string>
#include <vector>

#include "ctop/scenarios.hpp"

namespace ctop {

/// Second splitting of the thickened genus-2 surface: the cut runs along the
/// vertical annulus over a homotopically essential non-separating curve that
/// crosses each boundary dividing curve twice.  The piece is a
/// twice-punctured-torus cross I, presented as a genus-3 handlebody.  Its
/// boundary carries the two punctured-surface copies plus two rings covering
/// the splitting annulus: ring_plus (6 rectangles) holds the annulus
/// configuration and ring_minus (12 rectangles) holds the mirror copy seen
/// from the other side.  The three compressing disks are vertical: they run
/// over the band co-cores of both copies and cross the rings along rectangle
/// seams.
struct NonsepModel {
    HandlebodyPresentation piece;
    AnnulusDiagram annulus;
    std::vector<int> ring_plus;
    std::vector<int> ring_minus;
};

/// Builds the split piece.  T1 accepts any k; T2 families accept any k >= 1
/// (even k included: this splitting screens them out instead of rejecting
/// them at parse time).
NonsepModel split_nonseparating(const AnnulusDiagram& a);

/// Crossing labels (1..2n, cut-circle order) of compressing disk `disk` that
/// lie on either ring.
std::vector<int> ring_positions(const NonsepModel& m, int disk);

/// Scenario "5.1": category screens and uniqueness.  Even closed-curve
/// splittings admit no allowable state; each of T1(+-1) and T2+-(1) carries
/// exactly one tight class free of reducing bypasses.
ScenarioReport verify_nonsep_categories(int threads = 0);

/// Scenario "5.2": equivalence certificates connecting the four non-product
/// categories, with the folding-bypass and trivial-ball witnesses.
ScenarioReport verify_nonsep_equivalences(int threads = 0);

/// Scenario "main": both decompositions agree on two candidate classes.
ScenarioReport verify_main_theorem(int threads = 0);

}  // namespace ctop

#pragma once

#include <string>
#include <vector>

#include "ctop/annulus.hpp"
#include "ctop/classifier.hpp"

namespace ctop {

/// The annulus dividing set as read from the other side of the splitting
/// annulus: holonomy reverses sign, the boundary-parallel families keep
/// their side relative to the first disk's feet.
AnnulusDiagram mirror_annulus(const AnnulusDiagram& a);

/// Both halves of the thickened genus-2 surface split along the vertical
/// annulus over the separating curve.  Each half is a genus-2 handlebody
/// whose boundary carries the rounded dividing set induced by the two
/// boundary-surface arcs and the annulus configuration, with the two
/// compressing disks (first and second handle co-cores, thickened) as cut
/// curves.  seam_polys lists the boundary polygons covering the annulus
/// region of the plus half, so callers can tell seam crossings from
/// boundary-surface crossings.
struct SplitModel {
    HandlebodyPresentation plus;
    HandlebodyPresentation minus;
    AnnulusDiagram annulus;
    std::vector<int> seam_polys;
};

SplitModel split_along_A(const AnnulusDiagram& a);

/// Labels (1..2n, cut-circle order) of the crossings of compressing disk
/// `disk` of the plus half that lie on the splitting annulus.
std::vector<int> seam_positions(const SplitModel& m, int disk);

/// One reduction step: a bypass dug along the splitting annulus, witnessed
/// by a seam-parallel chord present in every allowable state of the split
/// piece.
struct ReductionStep {
    AnnulusDiagram from;
    AnnulusDiagram to;
    std::string certificate;
    State example;      // one allowable state realizing the bypass
    int disk = 0;       // compressing disk carrying the seam-parallel chord
    int chord_low = 0;  // lower crossing label of that chord (cyclic)
};

struct ReductionPath {
    AnnulusDiagram initial;
    AnnulusDiagram terminal;
    std::vector<ReductionStep> steps;
};

/// Drives every splitting to its terminal family: holonomy splittings with
/// |k| >= 2 lose one half-twist per step; odd closed-curve splittings lose
/// two closed curves per step.  Each step certifies that every allowable
/// state of the split piece contains a boundary-parallel chord joining two
/// adjacent seam crossings (the reducing bypass); a step with an allowable
/// state lacking one throws MalformedDiagram naming the state.
ReductionPath reduce_annulus(const AnnulusDiagram& a, int threads = 0);

struct ScenarioCheck {
    std::string claim;
    bool holds = false;
    std::string witness;
};

struct ScenarioReport {
    std::string id;
    std::string title;
    bool passed = false;
    std::vector<ScenarioCheck> checks;
};

/// Known scenario ids, in run order.
std::vector<std::string> scenario_ids();

/// Replays one scenario and returns its checked claims.  Unknown ids throw
/// std::invalid_argument.
ScenarioReport run_scenario(const std::string& id, int threads = 0);

std::string scenario_json(const ScenarioReport& r);

/// Aggregate over all scenarios: candidate class count and per-scenario
/// verdicts.
struct SummaryReport {
    std::vector<ScenarioReport> scenarios;
    int candidate_classes = 0;
    bool passed = false;
};

SummaryReport run_all_scenarios(int threads = 0);
std::string summary_json(const SummaryReport& r);

}  // namespace ctop

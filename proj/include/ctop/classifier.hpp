#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctop/assembly.hpp"
#include "ctop/bypass.hpp"
#include "ctop/chord.hpp"
#include "ctop/piece.hpp"

namespace ctop {

/// Raised when an enumeration would exceed its configured cap.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Genus-g handlebody with a dividing set on its boundary and one compressing
/// disk per handle.  Cutting along all disks must leave a union of balls.
struct HandlebodyPresentation {
    ManifoldPiece piece;
    std::vector<CutCurve> disks;
};

/// One chord diagram per compressing disk.
struct State {
    std::vector<ChordDiagram> configs;
    std::string key() const;
    bool operator==(const State& o) const { return configs == o.configs; }
};

/// Witnessed transition: a dig on one copy of a disk (copy 0 positive,
/// copy 1 negative) whose dig-only recount left every ball's curve count
/// unchanged.  kind starts as "direct" (condition 3 verified by recount);
/// scenario replays may upgrade it to "folding" or "trivial".
struct TransitionEdge {
    int source = 0;
    int target = 0;
    int disk = 0;
    int copy = 0;
    DiskArc arc{1, true};
    std::string kind = "direct";
};

struct TransitionGraph {
    std::vector<State> states;
    std::vector<char> allowable;
    std::vector<TransitionEdge> edges;
    std::vector<int> class_of;  // class ids, dense, ordered by first member
};

struct ClassInfo {
    int id = 0;
    bool tight = false;
    int size = 0;
    int representative = 0;  // lowest state index in the class
};

struct Verdict {
    std::vector<ClassInfo> classes;
    int tight_count = 0;
};

struct ClassifyOptions {
    std::size_t state_cap = 1000000;
    int threads = 0;  // 0 = hardware concurrency
};

class Classifier {
public:
    explicit Classifier(HandlebodyPresentation h);

    int genus() const { return static_cast<int>(tb_.size()); }
    int disk_n(int disk) const { return tb_[disk]; }
    const SphereAssembly& assembly() const { return assembly_; }

    std::vector<State> enumerate_states(std::size_t cap = 1000000) const;
    std::vector<int> closed_counts(const State& s) const;
    bool potentially_allowable(const State& s) const;

    /// Conditions for a state transition: the source is allowable (1), the
    /// dig changes the diagram (2), and the dig alone leaves every ball's
    /// curve count unchanged (3).  On failure returns nothing and sets
    /// reason to "source-not-allowable", "loop", "trivial" or
    /// "count-changed".
    std::optional<State> transition(const State& s, int disk, int copy, const DiskArc& arc,
                                    std::string* reason = nullptr) const;

    std::pair<TransitionGraph, Verdict> classify(const ClassifyOptions& opt = {}) const;

private:
    HandlebodyPresentation h_;
    bool obviously_overtwisted_;  // boundary has a contractible dividing curve
    std::vector<int> tb_;  // n_i per disk (tb_i = -n_i); filled while cutting
    ManifoldPiece cut_;    // all disks cut, placeholder configurations
    SphereAssembly assembly_;

    std::vector<ChordDiagram> caps(const State& s) const;
};

/// Graph and verdict as a deterministic JSON document.
std::string graph_json(const TransitionGraph& g, const Verdict& v);

/// Graphviz view: classes as clusters, nodes colored by allowability.
std::string graph_dot(const TransitionGraph& g, const Verdict& v);

}  // namespace ctop

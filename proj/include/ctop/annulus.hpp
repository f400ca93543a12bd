#pragma once

#include <string>

#include "ctop/chord.hpp"

namespace ctop {

/// The three families of dividing sets on an annulus whose boundary circles
/// carry two marked points each.
///
///   T1(k)      two circle-to-circle traversing arcs with holonomy k,
///              no closed curves.  Positive k twists in the direction of
///              the surface orientation of the annulus.
///   T2+(k)     one boundary-parallel arc per circle, on the side of the
///              first compressing-disk feet, plus k essential closed curves.
///   T2-(k)     same with the boundary-parallel arcs on the opposite side.
enum class AnnulusKind { T1, T2plus, T2minus };

struct AnnulusDiagram {
    AnnulusKind kind;
    int k;

    int closed_curves() const { return kind == AnnulusKind::T1 ? 0 : k; }
    bool operator==(const AnnulusDiagram& o) const { return kind == o.kind && k == o.k; }
    bool operator!=(const AnnulusDiagram& o) const { return !(*this == o); }
};

/// Canonical constructor with validation.  The first decomposition only cuts
/// along T2+ with odd k; `relax_parity` admits even k for the second
/// decomposition, where the overtwisted screen runs over T2 with even k.
AnnulusDiagram annulus_config(AnnulusKind kind, int k, bool relax_parity = false);

/// Literal format: "annulus T1 k=0", "annulus T2+ k=1", "annulus T2- k=2".
std::string format_annulus_literal(const AnnulusDiagram& d);
AnnulusDiagram parse_annulus_literal(const std::string& text, bool relax_parity = false);

}  // namespace ctop

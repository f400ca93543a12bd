#include "ctop/annulus.hpp"

#include <sstream>

namespace ctop {

AnnulusDiagram annulus_config(AnnulusKind kind, int k, bool relax_parity) {
    switch (kind) {
        case AnnulusKind::T1:
            break;
        case AnnulusKind::T2plus:
            if (k < 1) throw std::invalid_argument("annulus_config: T2+ requires k >= 1");
            if (k % 2 == 0 && !relax_parity)
                throw std::invalid_argument(
                    "annulus_config: T2+ with even k only arises in the second decomposition "
                    "(pass relax_parity)");
            break;
        case AnnulusKind::T2minus:
            if (k < 1) throw std::invalid_argument("annulus_config: T2- requires k >= 1");
            break;
    }
    return AnnulusDiagram{kind, k};
}

std::string format_annulus_literal(const AnnulusDiagram& d) {
    std::string name = d.kind == AnnulusKind::T1     ? "T1"
                       : d.kind == AnnulusKind::T2plus ? "T2+"
                                                       : "T2-";
    return "annulus " + name + " k=" + std::to_string(d.k);
}

AnnulusDiagram parse_annulus_literal(const std::string& text, bool relax_parity) {
    std::istringstream is(text);
    std::string head, name, kfield;
    is >> head >> name >> kfield;
    if (head != "annulus" || kfield.rfind("k=", 0) != 0)
        throw std::invalid_argument("parse_annulus_literal: expected 'annulus T1|T2+|T2- k=K'");
    AnnulusKind kind;
    if (name == "T1")
        kind = AnnulusKind::T1;
    else if (name == "T2+")
        kind = AnnulusKind::T2plus;
    else if (name == "T2-")
        kind = AnnulusKind::T2minus;
    else
        throw std::invalid_argument("parse_annulus_literal: unknown kind '" + name + "'");
    return annulus_config(kind, std::stoi(kfield.substr(2)), relax_parity);
}

}  // namespace ctop

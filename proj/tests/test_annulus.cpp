#include "ctop/annulus.hpp"
#include "doctest.h"

using namespace ctop;

TEST_CASE("annulus config validation") {
    CHECK(annulus_config(AnnulusKind::T1, -2).k == -2);
    CHECK(annulus_config(AnnulusKind::T1, 0).closed_curves() == 0);
    CHECK(annulus_config(AnnulusKind::T2plus, 3).closed_curves() == 3);
    CHECK(annulus_config(AnnulusKind::T2minus, 2).closed_curves() == 2);
    CHECK_THROWS_AS(annulus_config(AnnulusKind::T2plus, 0), std::invalid_argument);
    CHECK_THROWS_AS(annulus_config(AnnulusKind::T2minus, 0), std::invalid_argument);
    // even k on the plus side only arises in the second decomposition
    CHECK_THROWS_AS(annulus_config(AnnulusKind::T2plus, 2), std::invalid_argument);
    CHECK(annulus_config(AnnulusKind::T2plus, 2, true).k == 2);
}

TEST_CASE("annulus literal round trip") {
    AnnulusDiagram cases[] = {annulus_config(AnnulusKind::T1, -1),
                              annulus_config(AnnulusKind::T1, 0),
                              annulus_config(AnnulusKind::T2plus, 1),
                              annulus_config(AnnulusKind::T2minus, 4)};
    for (auto& d : cases) CHECK(parse_annulus_literal(format_annulus_literal(d)) == d);
    CHECK(format_annulus_literal(annulus_config(AnnulusKind::T2plus, 1)) == "annulus T2+ k=1");
    CHECK(parse_annulus_literal("annulus T1 k=0").kind == AnnulusKind::T1);
    CHECK_THROWS_AS(parse_annulus_literal("annulus T3 k=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_annulus_literal("annulus T2+ k=2"), std::invalid_argument);
}

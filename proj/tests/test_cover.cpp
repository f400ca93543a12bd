#include "ctop/cover.hpp"

#include "ctop/classifier.hpp"
#include "ctop/piece.hpp"
#include "doctest.h"

using namespace ctop;

TEST_CASE("trivial cover reproduces the downstairs piece") {
    CoverModel c = build_cover({0});
    REQUIRE(c.m == 1);
    CHECK(c.surface_chi == -1);
    CHECK(c.surface_boundaries == 1);
    REQUIRE(c.tori.size() == 1);
    CHECK(c.tori[0] == std::vector<int>{0});

    SplitModel sm = split_along_A({AnnulusKind::T2plus, 1});
    Classifier cl(sm.plus);

    // capping the first disk and regluing the second is the same surface as
    // cutting only along the first disk and rounding
    for (const ChordDiagram& cfg : enumerate_disk_configs(3)) {
        ManifoldPiece rd = round_edges(cut_disk(sm.plus.piece, sm.plus.disks[0], cfg));
        CoverState st{{cfg}, {cfg}};  // second-disk entry unused by the torus count
        auto counts = torus_closed_counts(c, st);
        REQUIRE(counts.size() == 1);
        CHECK(counts[0] == rd.boundary.count_dividing_components().closed);
    }

    // ball counts match the downstairs classifier state counts
    for (const ChordDiagram& f : enumerate_disk_configs(3))
        for (const ChordDiagram& s : enumerate_disk_configs(3)) {
            CoverState st{{f}, {s}};
            CHECK(cover_closed_counts(c, st) == cl.closed_counts({{f, s}}));
        }
}

TEST_CASE("trivial cover transitions agree with the classifier") {
    CoverModel c = build_cover({0});
    SplitModel sm = split_along_A({AnnulusKind::T2plus, 1});
    Classifier cl(sm.plus);
    for (const ChordDiagram& f : enumerate_disk_configs(3))
        for (const ChordDiagram& s : enumerate_disk_configs(3)) {
            State down{{f, s}};
            if (!cl.potentially_allowable(down)) continue;
            CoverState up{{f}, {s}};
            for (int disk = 0; disk < 2; ++disk)
                for (int copy = 0; copy < 2; ++copy)
                    for (int pos = 1; pos <= 6; ++pos) {
                        auto a = cl.transition(down, disk, copy, {pos, true});
                        auto b = cover_transition(c, up, disk, 0, copy, pos);
                        REQUIRE(a.has_value() == b.has_value());
                        if (a) CHECK(a->configs[disk] == *b);
                    }
        }
}

TEST_CASE("three-sheet cover taxonomy") {
    CoverModel c = build_cover({1});
    CHECK(c.m == 3);
    CHECK(c.surface_chi == -3);
    CHECK(c.surface_boundaries == 1);
    CHECK(c.tori.size() == 2);
    CHECK(c.first_self_glued != c.second_self_glued);
    CHECK(c.first_pair.size() == 2);
    CHECK(c.second_pair.size() == 2);
    // assembly shape: one ball per sheet, four holes per ball
    CHECK(c.assembly.balls() == 3);
    CHECK(c.assembly.holes().size() == 12);
}

TEST_CASE("cover scenario passes at the desk scale") {
    ScenarioReport r = verify_cover({1});
    CHECK(r.passed);
    CHECK(r.id == "4.3");
}

TEST_CASE("cover scale guard") {
    CHECK_THROWS_AS(verify_cover({0}), ResourceLimit);
    CHECK_THROWS_AS(verify_cover({3}), ResourceLimit);
    CHECK_THROWS_AS(CoverSpec{-1}.sheets(), std::invalid_argument);
}

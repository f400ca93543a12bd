#include "ctop/assembly.hpp"
#include "doctest.h"

using namespace ctop;

namespace {

// Solid torus with 2m longitudinal dividing curves, cut along one meridian
// disk of tb = -m: two holes, each longitude contributes one planar strand
// joining equal indices on the two copies.  The rounding joins of the two
// copies differ by one position net (cap endpoints sit half a spacing off
// the strand ends), written as shifts 0 and -1 in the shared labeling.
SphereAssembly solid_torus(int m) {
    std::vector<Hole> holes = {{2 * m, 0, 0}, {2 * m, -1, 0}};
    std::vector<std::pair<PointRef, PointRef>> planar;
    for (int j = 1; j <= 2 * m; ++j) planar.push_back({{0, j}, {1, j}});
    return SphereAssembly(std::move(holes), std::move(planar));
}

}  // namespace

TEST_CASE("meridian cut of the two-longitude solid torus yields one curve") {
    auto a = solid_torus(1);
    ChordDiagram cap(1, {{1, 2}});
    CHECK(a.closed_counts({cap, cap}) == std::vector<int>{1});
    CHECK(a.allowable({cap, cap}));
}

TEST_CASE("four-longitude solid torus counts depend on the cap choice") {
    // both copies of one meridian disk carry the same diagram, and either
    // boundary-parallel diagram closes the four longitudes into one curve
    auto a = solid_torus(2);
    ChordDiagram outer(2, {{1, 2}, {3, 4}});
    ChordDiagram nested(2, {{1, 4}, {2, 3}});
    CHECK(a.closed_counts({outer, outer}) == std::vector<int>{1});
    CHECK(a.allowable({outer, outer}));
    CHECK(a.closed_counts({nested, nested}) == std::vector<int>{1});
    CHECK(a.allowable({nested, nested}));
    CHECK(a.closed_counts({nested, outer}) == std::vector<int>{2});
    CHECK_FALSE(a.allowable({nested, outer}));
}

TEST_CASE("every cap pair closes all strands into loops") {
    // on a sphere assembly all strand ends are consumed: no open components
    auto a = solid_torus(3);
    for (auto& c1 : enumerate_disk_configs(3))
        for (auto& c2 : enumerate_disk_configs(3)) {
            auto counts = a.closed_counts({c1, c2});
            CHECK(counts[0] >= 1);
            CHECK(counts[0] <= 3);
        }
}

TEST_CASE("balls are counted independently") {
    std::vector<Hole> holes = {{2, 0, 0}, {2, -1, 0}, {2, 0, 1}, {2, -1, 1}};
    std::vector<std::pair<PointRef, PointRef>> planar = {
        {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}, {{2, 1}, {3, 1}}, {{2, 2}, {3, 2}}};
    SphereAssembly a(holes, planar, 2, {0, 1});
    ChordDiagram cap(1, {{1, 2}});
    CHECK(a.closed_counts({cap, cap, cap, cap}) == std::vector<int>{1, 2});
    CHECK_FALSE(a.allowable({cap, cap, cap, cap}));
}

TEST_CASE("assembly validation") {
    std::vector<Hole> holes = {{2, 0, 0}, {2, -1, 0}};
    CHECK_THROWS_AS(SphereAssembly(holes, {{{0, 1}, {1, 1}}, {{0, 1}, {1, 2}}}),
                    MalformedDiagram);  // point 0/1 reused, 0/2 unused
    CHECK_THROWS_AS(SphereAssembly({{2, 0, 0}, {2, -1, 1}},
                                   {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}, 2),
                    MalformedDiagram);  // strand between balls
    CHECK_THROWS_AS(SphereAssembly({{3, +1, 0}}, {}), MalformedDiagram);  // odd hole
    auto a = solid_torus(1);
    ChordDiagram big(2, {{1, 2}, {3, 4}});
    ChordDiagram cap(1, {{1, 2}});
    CHECK_THROWS_AS(a.closed_counts({big, cap}), MalformedDiagram);
    CHECK_THROWS_AS(a.closed_counts({cap}), std::invalid_argument);
}

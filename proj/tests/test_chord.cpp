#include <algorithm>
#include <set>

#include "ctop/chord.hpp"
#include "doctest.h"

using namespace ctop;

namespace {

// Oracle: enumerate every perfect matching on 2n points and keep the
// non-crossing ones by a direct pairwise interleaving test.  Independent of
// the nested recursion used by the library.
void all_matchings(std::vector<int>& free_pts, std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    if (free_pts.empty()) {
        out.push_back(acc);
        return;
    }
    int a = free_pts[0];
    for (size_t i = 1; i < free_pts.size(); ++i) {
        int b = free_pts[i];
        std::vector<int> rest;
        for (size_t j = 1; j < free_pts.size(); ++j)
            if (j != i) rest.push_back(free_pts[j]);
        acc.emplace_back(a, b);
        all_matchings(rest, acc, out);
        acc.pop_back();
    }
}

std::set<std::string> oracle_noncrossing_keys(int n) {
    std::vector<int> pts(2 * n);
    for (int i = 0; i < 2 * n; ++i) pts[i] = i + 1;
    std::vector<std::vector<std::pair<int, int>>> all;
    std::vector<std::pair<int, int>> acc;
    all_matchings(pts, acc, all);
    std::set<std::string> keys;
    for (auto& m : all) {
        bool crossing = false;
        for (size_t i = 0; i < m.size() && !crossing; ++i)
            for (size_t j = 0; j < m.size() && !crossing; ++j) {
                if (i == j) continue;
                auto [a, b] = m[i];
                auto [c, d] = m[j];
                if (a < c && c < b && b < d) crossing = true;
            }
        if (!crossing) {
            std::sort(m.begin(), m.end());
            std::string k;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i) k += ',';
                k += std::to_string(m[i].first) + '-' + std::to_string(m[i].second);
            }
            keys.insert(k);
        }
    }
    return keys;
}

uint64_t oracle_catalan(int n) {
    // convolution recurrence, independent of the closed form
    std::vector<uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c[n];
}

}  // namespace

TEST_CASE("disk config enumeration matches brute-force oracle") {
    for (int n = 1; n <= 5; ++n) {
        auto configs = enumerate_disk_configs(n);
        auto expect = oracle_noncrossing_keys(n);
        REQUIRE(configs.size() == expect.size());
        std::set<std::string> got;
        for (auto& d : configs) got.insert(d.key());
        CHECK(got == expect);
    }
}

TEST_CASE("config counts are Catalan numbers") {
    CHECK(enumerate_disk_configs(1).size() == 1);
    CHECK(enumerate_disk_configs(2).size() == 2);
    CHECK(enumerate_disk_configs(3).size() == 5);
    CHECK(enumerate_disk_configs(4).size() == 14);
    CHECK(enumerate_disk_configs(5).size() == 42);
    for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == oracle_catalan(n));
    CHECK_THROWS_AS(enumerate_disk_configs(0), std::invalid_argument);
}

TEST_CASE("validation rejects malformed matchings") {
    CHECK_THROWS_AS(ChordDiagram(2, {{1, 3}, {2, 4}}), MalformedDiagram);  // crossing
    CHECK_THROWS_AS(ChordDiagram(2, {{1, 2}, {2, 3}}), MalformedDiagram);  // repeated point
    CHECK_THROWS_AS(ChordDiagram(2, {{1, 2}}), MalformedDiagram);          // wrong count
    CHECK_THROWS_AS(ChordDiagram(1, {{1, 5}}), MalformedDiagram);          // out of range
    CHECK_THROWS_AS(ChordDiagram(0, {}), std::invalid_argument);
}

TEST_CASE("canonical form sorts pairs and normalizes order within a pair") {
    ChordDiagram d(3, {{6, 3}, {5, 4}, {2, 1}});
    CHECK(d.key() == "1-2,3-6,4-5");
    CHECK(d.partner(3) == 6);
    CHECK(d.partner(1) == 2);
    CHECK_THROWS_AS(d.partner(7), std::invalid_argument);
}

TEST_CASE("boundary-parallel test") {
    CHECK(is_boundary_parallel(ChordDiagram(1, {{1, 2}})));
    CHECK(is_boundary_parallel(ChordDiagram(3, {{1, 2}, {3, 4}, {5, 6}})));
    CHECK(is_boundary_parallel(ChordDiagram(2, {{2, 3}, {1, 4}})));  // 1-4 is adjacent cyclically
    CHECK_FALSE(is_boundary_parallel(ChordDiagram(3, {{1, 6}, {2, 5}, {3, 4}})));  // fully nested
    CHECK_FALSE(is_boundary_parallel(ChordDiagram(3, {{1, 2}, {3, 6}, {4, 5}})));
}

TEST_CASE("mirror is the reflection fixing point 1 and is involutive") {
    ChordDiagram d(2, {{1, 2}, {3, 4}});
    CHECK(mirror(d).key() == "1-4,2-3");
    for (int n = 1; n <= 5; ++n)
        for (auto& d2 : enumerate_disk_configs(n)) CHECK(mirror(mirror(d2)) == d2);
    // mirror permutes the configuration set
    for (int n = 1; n <= 5; ++n) {
        auto configs = enumerate_disk_configs(n);
        std::set<std::string> keys, mkeys;
        for (auto& c : configs) {
            keys.insert(c.key());
            mkeys.insert(mirror(c).key());
        }
        CHECK(keys == mkeys);
    }
}

TEST_CASE("disk literal round trip") {
    for (int n = 1; n <= 4; ++n)
        for (auto& d : enumerate_disk_configs(n)) {
            auto text = format_disk_literal(d);
            CHECK(parse_disk_literal(text) == d);
        }
    CHECK(format_disk_literal(ChordDiagram(3, {{1, 2}, {3, 6}, {4, 5}})) ==
          "disk n=3 match=(1-2,3-6,4-5)");
    CHECK_THROWS_AS(parse_disk_literal("disk n=2 match=(1-3,2-4)"), MalformedDiagram);
    CHECK_THROWS_AS(parse_disk_literal("plate n=2 match=(1-2,3-4)"), std::invalid_argument);
}

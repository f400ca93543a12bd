#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctop {

/// Raised when diagram data violates a structural invariant
/// (crossing chords, odd intersection counts, dangling strand ends, ...).
struct MalformedDiagram : std::runtime_error {
    explicit MalformedDiagram(const std::string& what) : std::runtime_error(what) {}
};

/// Dividing set on a convex disk with tb(boundary) = -n: a non-crossing
/// perfect matching on 2n boundary points.  Points are labeled 1..2n
/// counterclockwise as seen from outside the manifold and are pinned by the
/// boundary data, so the canonical form is just the sorted pair list (no
/// rotational reduction).
class ChordDiagram {
public:
    ChordDiagram(int n, std::vector<std::pair<int, int>> pairs);

    int n() const { return n_; }
    int points() const { return 2 * n_; }

    /// Partner of boundary point p (1-based).
    int partner(int p) const;

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// Canonical key, e.g. "1-2,3-6,4-5".
    std::string key() const;

    bool operator==(const ChordDiagram& other) const {
        return n_ == other.n_ && pairs_ == other.pairs_;
    }
    bool operator!=(const ChordDiagram& other) const { return !(*this == other); }
    bool operator<(const ChordDiagram& other) const {
        if (n_ != other.n_) return n_ < other.n_;
        return pairs_ < other.pairs_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;  // each (a, b) with a < b, sorted
};

/// All non-crossing perfect matchings on 2n points, canonical, sorted by key.
/// Count equals the n-th Catalan number.  n = 0 is rejected: a convex disk
/// cutting surface has tb <= -1 here.
std::vector<ChordDiagram> enumerate_disk_configs(int n);

/// True iff every chord cuts off a half-disk containing no other chord
/// endpoint.  For a non-crossing matching this means every chord joins
/// cyclically adjacent points.
bool is_boundary_parallel(const ChordDiagram& d);

/// Reflection across the diameter through point 1.  Models how the negative
/// copy of a cutting surface presents its dividing set to the cut-open
/// manifold.  Involutive.
ChordDiagram mirror(const ChordDiagram& d);

uint64_t catalan(int n);

/// Literal format: "disk n=3 match=(1-2,3-6,4-5)".  Bit-exact round trip.
std::string format_disk_literal(const ChordDiagram& d);
ChordDiagram parse_disk_literal(const std::string& text);

}  // namespace ctop

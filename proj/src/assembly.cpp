#include "ctop/assembly.hpp"

#include <stdexcept>

namespace ctop {

SphereAssembly::SphereAssembly(std::vector<Hole> holes,
                               std::vector<std::pair<PointRef, PointRef>> planar, int balls,
                               std::vector<int> base_closed_per_ball)
    : holes_(std::move(holes)),
      planar_(std::move(planar)),
      balls_(balls),
      base_closed_per_ball_(std::move(base_closed_per_ball)) {
    if (balls_ < 1) throw std::invalid_argument("SphereAssembly: need at least one ball");
    base_closed_per_ball_.resize(balls_, 0);
    std::vector<std::vector<int>> used(holes_.size());
    for (size_t h = 0; h < holes_.size(); ++h) {
        if (holes_[h].size < 2 || holes_[h].size % 2 != 0)
            throw MalformedDiagram("SphereAssembly: hole size must be even and positive");
        if (holes_[h].shift < -1 || holes_[h].shift > 1)
            throw std::invalid_argument("SphereAssembly: shift must be -1, 0 or +1");
        if (holes_[h].ball < 0 || holes_[h].ball >= balls_)
            throw std::invalid_argument("SphereAssembly: ball id out of range");
        used[h].assign(holes_[h].size, 0);
    }
    for (auto& [a, b] : planar_) {
        for (const PointRef& p : {a, b}) {
            if (p.hole < 0 || p.hole >= static_cast<int>(holes_.size()) || p.index < 1 ||
                p.index > holes_[p.hole].size)
                throw std::invalid_argument("SphereAssembly: planar point out of range");
            used[p.hole][p.index - 1]++;
        }
        if (holes_[a.hole].ball != holes_[b.hole].ball)
            throw MalformedDiagram("SphereAssembly: planar strand crosses between balls");
    }
    for (size_t h = 0; h < holes_.size(); ++h)
        for (int j = 0; j < holes_[h].size; ++j)
            if (used[h][j] != 1)
                throw MalformedDiagram("SphereAssembly: each hole point needs one planar strand");
}

std::vector<int> SphereAssembly::closed_counts(const std::vector<ChordDiagram>& caps) const {
    if (caps.size() != holes_.size())
        throw std::invalid_argument("SphereAssembly: one cap per hole required");
    StrandGraph g;
    std::vector<int> pbase(holes_.size()), cbase(holes_.size());
    std::vector<int> group;
    for (size_t h = 0; h < holes_.size(); ++h) {
        if (caps[h].points() != holes_[h].size)
            throw MalformedDiagram("SphereAssembly: cap size does not match hole");
        pbase[h] = g.add_nodes(holes_[h].size);
        cbase[h] = g.add_nodes(holes_[h].size);
        for (int j = 0; j < 2 * holes_[h].size; ++j) group.push_back(holes_[h].ball);
    }
    for (auto& [a, b] : planar_)
        g.add_bond(pbase[a.hole] + a.index - 1, pbase[b.hole] + b.index - 1);
    for (size_t h = 0; h < holes_.size(); ++h) {
        int size = holes_[h].size;
        for (auto [a, b] : caps[h].pairs()) g.add_bond(cbase[h] + a - 1, cbase[h] + b - 1);
        for (int j = 0; j < size; ++j) {
            int target = ((j + holes_[h].shift) % size + size) % size;
            g.add_bond(cbase[h] + j, pbase[h] + target);
        }
    }
    auto counts = g.closed_by_group(group, balls_);
    for (int b = 0; b < balls_; ++b) counts[b] += base_closed_per_ball_[b];
    return counts;
}

bool SphereAssembly::allowable(const std::vector<ChordDiagram>& caps) const {
    for (int c : closed_counts(caps))
        if (c != 1) return false;
    return true;
}

}  // namespace ctop

#include "ctop/strand_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ctop {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int StrandGraph::add_node() {
    degree_.push_back(0);
    return static_cast<int>(degree_.size()) - 1;
}

int StrandGraph::add_nodes(int count) {
    int first = static_cast<int>(degree_.size());
    degree_.resize(degree_.size() + count, 0);
    return first;
}

int StrandGraph::add_bond(int a, int b) {
    if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
        throw std::invalid_argument("StrandGraph::add_bond: node out of range");
    if (a == b)
        throw MalformedDiagram("StrandGraph::add_bond: self bond (a circle is two nodes, two bonds)");
    if (degree_[a] >= 2 || degree_[b] >= 2)
        throw MalformedDiagram("StrandGraph::add_bond: node degree would exceed 2");
    degree_[a]++;
    degree_[b]++;
    bonds_.emplace_back(a, b);
    return static_cast<int>(bonds_.size()) - 1;
}

StrandGraph::Counts StrandGraph::count() const {
    UnionFind uf(node_count());
    for (auto [a, b] : bonds_)
        if (a >= 0) uf.unite(a, b);
    std::vector<char> open(node_count(), 0);
    for (int v = 0; v < node_count(); ++v)
        if (degree_[v] < 2) open[uf.find(v)] = 1;
    std::vector<char> seen(node_count(), 0);
    Counts c;
    for (int v = 0; v < node_count(); ++v) {
        if (degree_[v] == 0) continue;  // ignore isolated nodes
        int r = uf.find(v);
        if (seen[r]) continue;
        seen[r] = 1;
        if (open[r])
            c.arcs++;
        else
            c.closed++;
    }
    return c;
}

std::vector<int> StrandGraph::component_reps() const {
    UnionFind uf(node_count());
    for (auto [a, b] : bonds_)
        if (a >= 0) uf.unite(a, b);
    std::vector<int> reps(node_count());
    for (int v = 0; v < node_count(); ++v) reps[v] = uf.find(v);
    return reps;
}

std::vector<int> StrandGraph::closed_by_group(const std::vector<int>& group_of,
                                              int group_count) const {
    UnionFind uf(node_count());
    for (auto [a, b] : bonds_)
        if (a >= 0) uf.unite(a, b);
    std::vector<int> comp_group(node_count(), -1);
    std::vector<char> open(node_count(), 0);
    for (int v = 0; v < node_count(); ++v) {
        if (degree_[v] == 0) continue;
        int r = uf.find(v);
        if (degree_[v] < 2) open[r] = 1;
        int g = group_of[v];
        if (g < 0) continue;
        if (comp_group[r] >= 0 && comp_group[r] != g)
            throw MalformedDiagram("closed_by_group: component spans two groups");
        comp_group[r] = g;
    }
    std::vector<int> out(group_count, 0);
    std::vector<char> seen(node_count(), 0);
    for (int v = 0; v < node_count(); ++v) {
        if (degree_[v] == 0) continue;
        int r = uf.find(v);
        if (seen[r]) continue;
        seen[r] = 1;
        if (!open[r] && comp_group[r] >= 0) out[comp_group[r]]++;
    }
    return out;
}

void StrandGraph::rewrite(const std::array<Site, 3>& sites, bool dig) {
    // Detect shared bonds: the same strand crossed at two of the sites.
    for (int i = 0; i < 3; ++i) {
        if (sites[i].bond < 0 || sites[i].bond >= static_cast<int>(bonds_.size()) ||
            bonds_[sites[i].bond].first < 0)
            throw std::invalid_argument("StrandGraph::rewrite: bad bond");
        auto [u, v] = bonds_[sites[i].bond];
        if (sites[i].b_node != u && sites[i].b_node != v)
            throw std::invalid_argument("StrandGraph::rewrite: b_node not on bond");
    }
    if (sites[0].bond == sites[1].bond && sites[1].bond == sites[2].bond)
        throw MalformedDiagram("StrandGraph::rewrite: three sites on one segment");

    // b[i], t[i]: new stub nodes for site i.
    int b[3], t[3];
    for (int i = 0; i < 3; ++i) {
        b[i] = add_node();
        t[i] = add_node();
    }

    auto remove_bond = [this](int id) {
        auto [u, v] = bonds_[id];
        degree_[u]--;
        degree_[v]--;
        bonds_[id] = {-1, -1};
    };

    // Cut the three bonds into fragments.
    std::array<bool, 3> done{false, false, false};
    for (int i = 0; i < 3; ++i) {
        if (done[i]) continue;
        int j = -1;
        for (int k = i + 1; k < 3; ++k)
            if (sites[k].bond == sites[i].bond) j = k;
        auto [u, v] = bonds_[sites[i].bond];
        if (j < 0) {
            // single cut: b-side stub keeps b_node, t-side keeps the other end
            int other = (sites[i].b_node == u) ? v : u;
            remove_bond(sites[i].bond);
            add_bond(sites[i].b_node, b[i]);
            add_bond(other, t[i]);
            done[i] = true;
        } else {
            // double cut: two stubs plus a middle piece joining the t ends
            if (sites[i].b_node == sites[j].b_node)
                throw MalformedDiagram("StrandGraph::rewrite: double cut with equal b sides");
            remove_bond(sites[i].bond);
            add_bond(sites[i].b_node, b[i]);
            add_bond(sites[j].b_node, b[j]);
            add_bond(t[i], t[j]);
            done[i] = done[j] = true;
        }
    }

    if (dig) {
        add_bond(b[0], t[2]);
        add_bond(b[1], b[2]);
        add_bond(t[0], t[1]);
    } else {
        add_bond(b[0], b[1]);
        add_bond(b[2], t[0]);
        add_bond(t[2], t[1]);
    }
}

}  // namespace ctop

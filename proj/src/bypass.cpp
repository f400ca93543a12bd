#include "ctop/bypass.hpp"

#include <sstream>

namespace ctop {

DiskRewrite apply_bypass(const ChordDiagram& d, const DiskArc& arc) {
    int m = 2 * d.n();
    if (arc.pos < 1 || arc.pos > m)
        throw std::invalid_argument("apply_bypass: arc position out of range");
    if (d.n() == 1)
        throw std::invalid_argument(
            "apply_bypass: a single-chord cap admits no arc crossing three distinct strand "
            "segments");

    StrandGraph g;
    g.add_nodes(m);  // node p-1 is boundary point p
    std::vector<int> bond_of(m, -1);
    for (auto [a, b] : d.pairs()) {
        int id = g.add_bond(a - 1, b - 1);
        bond_of[a - 1] = bond_of[b - 1] = id;
    }

    std::array<StrandGraph::Site, 3> sites;
    for (int i = 0; i < 3; ++i) {
        int q = (arc.pos - 1 + i) % m;
        sites[i] = {bond_of[q], q};
    }
    g.rewrite(sites, arc.dig);

    // Boundary points keep degree one; pair them up by component.
    auto reps = g.component_reps();
    std::vector<int> mate(g.node_count(), -1);
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < m; ++p) {
        int r = reps[p];
        if (mate[r] < 0)
            mate[r] = p;
        else
            pairs.emplace_back(mate[r] + 1, p + 1);
    }
    DiskRewrite out{ChordDiagram(d.n(), pairs), g.count().closed};
    return out;
}

bool is_trivial_move(const ChordDiagram& d, const DiskArc& arc) {
    DiskRewrite r = apply_bypass(d, arc);
    return r.loops == 0 && r.diagram == d;
}

std::string format_arc_literal(const std::string& surface, const DiskArc& arc, int points) {
    int a = arc.pos;
    int b = (arc.pos % points) + 1;
    int c = (b % points) + 1;
    std::string s = "arc on=" + surface + " cross=(" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")";
    if (!arc.dig) s += " side=attach";
    return s;
}

DiskArc parse_arc_literal(const std::string& text, int points, std::string* surface) {
    std::istringstream is(text);
    std::string head, onfield, crossfield, sidefield;
    is >> head >> onfield >> crossfield;
    if (head != "arc" || onfield.rfind("on=", 0) != 0 || crossfield.rfind("cross=(", 0) != 0 ||
        crossfield.back() != ')')
        throw std::invalid_argument("parse_arc_literal: expected 'arc on=S cross=(a,b,c)'");
    if (surface) *surface = onfield.substr(3);
    int a, b, c;
    char comma1, comma2;
    std::istringstream nums(crossfield.substr(7, crossfield.size() - 8));
    if (!(nums >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',')
        throw std::invalid_argument("parse_arc_literal: bad cross list");
    if (a < 1 || a > points || b != (a % points) + 1 || c != (b % points) + 1)
        throw std::invalid_argument("parse_arc_literal: crossings must be consecutive positions");
    DiskArc arc{a, true};
    if (is >> sidefield) {
        if (sidefield == "side=attach")
            arc.dig = false;
        else if (sidefield != "side=dig")
            throw std::invalid_argument("parse_arc_literal: bad side field");
    }
    return arc;
}

}  // namespace ctop

#include "ctop/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace ctop {

namespace {

ManifoldPiece cut_all(const HandlebodyPresentation& h, std::vector<int>* tb) {
    if (h.disks.empty()) throw std::invalid_argument("Classifier: no compressing disks");
    ManifoldPiece cut = h.piece;
    for (const CutCurve& d : h.disks) {
        int n = -curve_tb(cut, d);
        if (n < 1) throw MalformedDiagram("Classifier: compressing disk needs tb < 0");
        tb->push_back(n);
        cut = cut_disk(cut, d, enumerate_disk_configs(n).front());
    }
    return cut;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
};

void run_chunked(int jobs, int threads, const std::function<void(int, int)>& body) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, jobs));
    std::vector<std::thread> pool;
    int chunk = (jobs + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = t * chunk, hi = std::min(jobs, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::string State::key() const {
    std::string k;
    for (size_t i = 0; i < configs.size(); ++i) {
        if (i) k += "|";
        k += configs[i].key();
    }
    return k;
}

Classifier::Classifier(HandlebodyPresentation h)
    : h_(std::move(h)),
      obviously_overtwisted_(h_.piece.boundary.has_trivial_closed_curve()),
      cut_(cut_all(h_, &tb_)),
      assembly_(to_assembly(cut_)) {}

std::vector<ChordDiagram> Classifier::caps(const State& s) const {
    if (static_cast<int>(s.configs.size()) != genus())
        throw std::invalid_argument("Classifier: one configuration per disk required");
    std::vector<ChordDiagram> out;
    out.reserve(2 * s.configs.size());
    for (const ChordDiagram& c : s.configs) {
        out.push_back(c);
        out.push_back(c);
    }
    return out;
}

std::vector<State> Classifier::enumerate_states(std::size_t cap) const {
    std::vector<std::vector<ChordDiagram>> per_disk;
    std::size_t total = 1;
    for (int n : tb_) {
        per_disk.push_back(enumerate_disk_configs(n));
        if (total > cap / per_disk.back().size() &&
            total * per_disk.back().size() > cap)
            throw ResourceLimit("Classifier: state space exceeds cap of " + std::to_string(cap));
        total *= per_disk.back().size();
    }
    std::vector<State> states;
    states.reserve(total);
    std::vector<size_t> idx(tb_.size(), 0);
    while (true) {
        State s;
        for (size_t d = 0; d < idx.size(); ++d) s.configs.push_back(per_disk[d][idx[d]]);
        states.push_back(std::move(s));
        size_t d = idx.size();
        while (d > 0 && ++idx[d - 1] == per_disk[d - 1].size()) idx[--d] = 0;
        if (d == 0) break;
    }
    return states;
}

std::vector<int> Classifier::closed_counts(const State& s) const {
    return assembly_.closed_counts(caps(s));
}

bool Classifier::potentially_allowable(const State& s) const {
    // a contractible closed dividing curve on the uncut boundary already
    // violates the Giroux criterion, whatever the disk configurations
    if (obviously_overtwisted_) return false;
    return assembly_.allowable(caps(s));
}

std::optional<State> Classifier::transition(const State& s, int disk, int copy,
                                            const DiskArc& arc, std::string* reason) const {
    auto fail = [&](const char* why) -> std::optional<State> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    if (disk < 0 || disk >= genus() || (copy != 0 && copy != 1))
        throw std::invalid_argument("Classifier: bad disk or copy index");
    if (!arc.dig) throw std::invalid_argument("Classifier: transitions dig");
    if (!potentially_allowable(s)) return fail("source-not-allowable");
    // a one-chord disk only admits arcs crossing a single strand; such
    // moves never change the diagram
    if (tb_[disk] == 1) return fail("trivial");

    const ChordDiagram& cfg = s.configs[disk];
    ChordDiagram view = copy == 0 ? cfg : mirror(cfg);
    DiskRewrite rw = apply_bypass(view, arc);
    ChordDiagram dug = copy == 0 ? rw.diagram : mirror(rw.diagram);
    if (dug == cfg && rw.loops == 0) return fail("trivial");

    // condition 3: recount with only the dug copy replaced; a loop pinched
    // off by the dig stays on that copy's sphere and counts too
    auto dig_caps = caps(s);
    dig_caps[2 * disk + copy] = dug;
    auto dig_counts = assembly_.closed_counts(dig_caps);
    dig_counts[assembly_.holes()[2 * disk + copy].ball] += rw.loops;
    if (dig_counts != closed_counts(s)) return fail("count-changed");

    State out = s;
    out.configs[disk] = dug;
    if (reason) reason->clear();
    return out;
}

std::pair<TransitionGraph, Verdict> Classifier::classify(const ClassifyOptions& opt) const {
    TransitionGraph g;
    g.states = enumerate_states(opt.state_cap);
    int n = static_cast<int>(g.states.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[g.states[i].key()] = i;

    g.allowable.assign(n, 0);
    run_chunked(n, opt.threads, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) g.allowable[i] = potentially_allowable(g.states[i]);
    });

    // per-state buffers keep the merged edge list schedule-independent
    std::vector<std::vector<TransitionEdge>> found(n);
    run_chunked(n, opt.threads, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            if (!g.allowable[i]) continue;
            for (int d = 0; d < genus(); ++d)
                for (int copy = 0; copy < 2; ++copy) {
                    std::map<std::string, DiskArc> seen;  // dedup by rewrite
                    for (int pos = 1; pos <= 2 * tb_[d]; ++pos) {
                        auto t = transition(g.states[i], d, copy, {pos, true});
                        if (t && !seen.count(t->key())) seen.emplace(t->key(), DiskArc{pos, true});
                    }
                    for (auto& [tkey, arc] : seen)
                        found[i].push_back({i, index.at(tkey), d, copy, arc, "direct"});
                }
        }
    });
    for (auto& f : found) g.edges.insert(g.edges.end(), f.begin(), f.end());

    UnionFind uf(n);
    for (const TransitionEdge& e : g.edges) uf.unite(e.source, e.target);

    g.class_of.assign(n, -1);
    Verdict v;
    for (int i = 0; i < n; ++i) {
        int root = uf.find(i);
        if (g.class_of[root] < 0) {
            g.class_of[root] = static_cast<int>(v.classes.size());
            v.classes.push_back({g.class_of[root], true, 0, i});
        }
        g.class_of[i] = g.class_of[root];
        ClassInfo& c = v.classes[g.class_of[i]];
        c.size++;
        if (!g.allowable[i]) c.tight = false;
    }
    for (const ClassInfo& c : v.classes) v.tight_count += c.tight ? 1 : 0;
    return {std::move(g), std::move(v)};
}

std::string graph_json(const TransitionGraph& g, const Verdict& v) {
    nlohmann::ordered_json j;
    j["states"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < g.states.size(); ++i)
        j["states"].push_back({{"index", i},
                               {"key", g.states[i].key()},
                               {"allowable", static_cast<bool>(g.allowable[i])},
                               {"class", g.class_of[i]}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const TransitionEdge& e : g.edges)
        j["edges"].push_back({{"source", e.source},
                              {"target", e.target},
                              {"disk", e.disk},
                              {"copy", e.copy},
                              {"arc_pos", e.arc.pos},
                              {"kind", e.kind}});
    j["classes"] = nlohmann::ordered_json::array();
    for (const ClassInfo& c : v.classes)
        j["classes"].push_back({{"id", c.id},
                                {"tight", c.tight},
                                {"size", c.size},
                                {"representative", c.representative}});
    j["tight_count"] = v.tight_count;
    return j.dump(2) + "\n";
}

std::string graph_dot(const TransitionGraph& g, const Verdict& v) {
    std::ostringstream out;
    out << "digraph transitions {\n  node [style=filled];\n";
    for (const ClassInfo& c : v.classes) {
        out << "  subgraph cluster_" << c.id << " {\n    label=\"class " << c.id
            << (c.tight ? " (tight)" : " (overtwisted)") << "\";\n";
        for (size_t i = 0; i < g.states.size(); ++i)
            if (g.class_of[i] == c.id)
                out << "    s" << i << " [label=\"" << g.states[i].key() << "\", fillcolor=\""
                    << (g.allowable[i] ? "palegreen" : "lightpink") << "\"];\n";
        out << "  }\n";
    }
    for (const TransitionEdge& e : g.edges)
        out << "  s" << e.source << " -> s" << e.target << " [label=\"D" << e.disk
            << (e.copy == 0 ? "+" : "-") << "@" << e.arc.pos << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace ctop

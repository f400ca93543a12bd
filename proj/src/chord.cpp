#include "ctop/chord.hpp"

#include <algorithm>
#include <sstream>

namespace ctop {

ChordDiagram::ChordDiagram(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
    if (n_ < 1) throw std::invalid_argument("ChordDiagram: n must be >= 1");
    if (static_cast<int>(pairs_.size()) != n_)
        throw MalformedDiagram("ChordDiagram: expected " + std::to_string(n_) + " chords");
    std::vector<int> seen(2 * n_ + 1, 0);
    for (auto& pr : pairs_) {
        if (pr.first > pr.second) std::swap(pr.first, pr.second);
        if (pr.first < 1 || pr.second > 2 * n_ || pr.first == pr.second)
            throw MalformedDiagram("ChordDiagram: point out of range");
        seen[pr.first]++;
        seen[pr.second]++;
    }
    for (int p = 1; p <= 2 * n_; ++p)
        if (seen[p] != 1) throw MalformedDiagram("ChordDiagram: not a perfect matching");
    std::sort(pairs_.begin(), pairs_.end());
    // planarity: (a,b) and (c,d) with a<b, c<d cross iff a<c<b<d
    for (size_t i = 0; i < pairs_.size(); ++i)
        for (size_t j = i + 1; j < pairs_.size(); ++j) {
            auto [a, b] = pairs_[i];
            auto [c, d] = pairs_[j];
            if (a < c && c < b && b < d)
                throw MalformedDiagram("ChordDiagram: crossing chords " + std::to_string(a) +
                                       "-" + std::to_string(b) + " and " + std::to_string(c) +
                                       "-" + std::to_string(d));
        }
}

int ChordDiagram::partner(int p) const {
    for (auto [a, b] : pairs_) {
        if (a == p) return b;
        if (b == p) return a;
    }
    throw std::invalid_argument("ChordDiagram::partner: point out of range");
}

std::string ChordDiagram::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (i) os << ',';
        os << pairs_[i].first << '-' << pairs_[i].second;
    }
    return os.str();
}

namespace {

// match the first point at odd distance along the list; the split keeps both
// sides even, which is exactly the non-crossing condition
void enumerate_rec(const std::vector<int>& points,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    if (points.empty()) {
        out.push_back(acc);
        return;
    }
    int first = points[0];
    for (size_t j = 1; j < points.size(); j += 2) {
        std::vector<int> inside(points.begin() + 1, points.begin() + j);
        std::vector<int> outside(points.begin() + j + 1, points.end());
        acc.emplace_back(first, points[j]);
        std::vector<std::vector<std::pair<int, int>>> insides;
        {
            std::vector<std::pair<int, int>> tmp;
            enumerate_rec(inside, tmp, insides);
        }
        for (const auto& in_match : insides) {
            size_t mark = acc.size();
            acc.insert(acc.end(), in_match.begin(), in_match.end());
            enumerate_rec(outside, acc, out);
            acc.resize(mark);
        }
        acc.pop_back();
    }
}

}  // namespace

std::vector<ChordDiagram> enumerate_disk_configs(int n) {
    if (n < 1)
        throw std::invalid_argument(
            "enumerate_disk_configs: n must be >= 1 (convex disk cutting surfaces have tb <= -1)");
    std::vector<int> points(2 * n);
    for (int i = 0; i < 2 * n; ++i) points[i] = i + 1;
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> acc;
    enumerate_rec(points, acc, raw);
    std::vector<ChordDiagram> out;
    out.reserve(raw.size());
    for (auto& m : raw) out.emplace_back(n, std::move(m));
    std::sort(out.begin(), out.end(),
              [](const ChordDiagram& a, const ChordDiagram& b) { return a.key() < b.key(); });
    return out;
}

bool is_boundary_parallel(const ChordDiagram& d) {
    int m = d.points();
    for (auto [a, b] : d.pairs()) {
        bool adjacent = (b == a + 1) || (a == 1 && b == m);
        if (!adjacent) return false;
    }
    return true;
}

ChordDiagram mirror(const ChordDiagram& d) {
    int m = d.points();
    auto reflect = [m](int p) { return p == 1 ? 1 : m + 2 - p; };
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(d.pairs().size());
    for (auto [a, b] : d.pairs()) pairs.emplace_back(reflect(a), reflect(b));
    return ChordDiagram(d.n(), std::move(pairs));
}

uint64_t catalan(int n) {
    uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

std::string format_disk_literal(const ChordDiagram& d) {
    return "disk n=" + std::to_string(d.n()) + " match=(" + d.key() + ")";
}

ChordDiagram parse_disk_literal(const std::string& text) {
    std::istringstream is(text);
    std::string head, nfield, mfield;
    is >> head >> nfield >> mfield;
    if (head != "disk" || nfield.rfind("n=", 0) != 0 || mfield.rfind("match=(", 0) != 0 ||
        mfield.back() != ')')
        throw std::invalid_argument("parse_disk_literal: expected 'disk n=N match=(a-b,...)'");
    int n = std::stoi(nfield.substr(2));
    std::string body = mfield.substr(7, mfield.size() - 8);
    std::vector<std::pair<int, int>> pairs;
    std::istringstream bs(body);
    std::string item;
    while (std::getline(bs, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("parse_disk_literal: bad chord '" + item + "'");
        pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return ChordDiagram(n, std::move(pairs));
}

}  // namespace ctop

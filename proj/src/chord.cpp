#include "chord.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace mk {

bool chords_interleave(int p, int q, int r, int s) {
    // p < q and r < s; interleave iff exactly one of r, s is inside (p, q)
    return (p < r && r < q) != (p < s && s < q);
}

ChordDiagram::ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
    int n = (int)chords_.size();
    std::set<int> used;
    std::set<std::string> ids;
    for (auto& c : chords_) {
        if (c.sign != 1 && c.sign != -1) fail_domain("chord sign must be +1 or -1");
        if (c.p >= c.q) fail_domain("chord endpoints must satisfy p < q");
        if (c.p < 0 || c.q >= 2 * n)
            fail_domain("chord endpoint out of range [0, " + std::to_string(2 * n) + ")");
        if (!used.insert(c.p).second || !used.insert(c.q).second)
            fail_domain("duplicate endpoint position " + std::to_string(used.count(c.p) ? c.p : c.q));
        if (!ids.insert(c.id).second) fail_domain("duplicate chord id '" + c.id + "'");
        if (c.id.empty()) fail_domain("empty chord id");
    }
    for (size_t i = 0; i < chords_.size(); i++)
        for (size_t j = i + 1; j < chords_.size(); j++) {
            const Chord &a = chords_[i], &b = chords_[j];
            if (a.placement == b.placement && chords_interleave(a.p, a.q, b.p, b.q))
                fail_domain("chords '" + a.id + "' and '" + b.id +
                            "' share a placement but interleave");
        }
    std::sort(chords_.begin(), chords_.end(),
              [](const Chord& a, const Chord& b) { return a.p < b.p; });
}

const Chord& ChordDiagram::chord(const std::string& id) const {
    for (auto& c : chords_)
        if (c.id == id) return c;
    fail_domain("unknown chord id '" + id + "'");
}

bool ChordDiagram::has_chord(const std::string& id) const {
    for (auto& c : chords_)
        if (c.id == id) return true;
    return false;
}

bool ChordDiagram::is_trivial_diagram() const {
    for (auto& c : chords_)
        if (c.placement != chords_.front().placement) return false;
    return true;
}

IntersectionGraph ChordDiagram::intersection_graph() const {
    IntersectionGraph g;
    for (auto& c : chords_) g.vertices.push_back({c.id, c.placement, c.sign});
    for (size_t i = 0; i < chords_.size(); i++)
        for (size_t j = i + 1; j < chords_.size(); j++) {
            const Chord &a = chords_[i], &b = chords_[j];
            if (chords_interleave(a.p, a.q, b.p, b.q)) g.edges.emplace_back(a.id, b.id);
        }
    return g;
}

bool ChordDiagram::graph_connected() const {
    if (chords_.size() <= 1) return true;
    IntersectionGraph g = intersection_graph();
    std::map<std::string, std::vector<std::string>> adj;
    for (auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<std::string> seen;
    std::vector<std::string> stack{chords_.front().id};
    while (!stack.empty()) {
        std::string u = stack.back();
        stack.pop_back();
        if (!seen.insert(u).second) continue;
        for (auto& v : adj[u]) stack.push_back(v);
    }
    return seen.size() == chords_.size();
}

std::string ChordDiagram::fresh_id() const {
    for (int k = 1;; k++) {
        std::string id = std::to_string(k);
        if (!has_chord(id)) return id;
    }
}

ChordDiagram ChordDiagram::apply_op1(const std::string& target, int sign, std::string* new_id,
                                     std::optional<int> endpoint) const {
    const Chord& tc = chord(target);
    if (sign != 1 && sign != -1) fail_domain("sign must be +1 or -1");
    int e = endpoint.value_or(tc.p);
    if (e != tc.p && e != tc.q)
        fail_domain("endpoint " + std::to_string(e) + " does not belong to chord '" + target + "'");
    // shift positions to open two slots flanking endpoint e
    auto sh = [e](int x) { return x < e ? x : (x == e ? e + 1 : x + 2); };
    std::vector<Chord> out;
    for (auto& c : chords_) out.push_back({c.id, c.placement, c.sign, sh(c.p), sh(c.q)});
    std::string id = fresh_id();
    Placement np = tc.placement == Placement::Inner ? Placement::Outer : Placement::Inner;
    out.push_back({id, np, sign, e, e + 2});
    if (new_id) *new_id = id;
    return ChordDiagram(std::move(out));
}

ChordDiagram ChordDiagram::apply_op2(const std::string& target, int sign,
                                     std::string* new_id) const {
    const Chord& tc = chord(target);
    if (sign != 1 && sign != -1) fail_domain("sign must be +1 or -1");
    int p = tc.p, q = tc.q;
    // shift positions to open slots just outside target's endpoints
    auto sh = [p, q](int x) { return x < p ? x : (x <= q ? x + 1 : x + 2); };
    std::vector<Chord> out;
    for (auto& c : chords_) out.push_back({c.id, c.placement, c.sign, sh(c.p), sh(c.q)});
    std::string id = fresh_id();
    out.push_back({id, tc.placement, sign, p, q + 2});
    if (new_id) *new_id = id;
    return ChordDiagram(std::move(out));
}

std::string ChordDiagram::serialize() const {
    std::ostringstream os;
    os << "cd " << n() << "\n";
    for (auto& c : chords_)
        os << "chord " << c.id << " " << (c.placement == Placement::Inner ? "I" : "O") << " "
           << (c.sign > 0 ? "+" : "-") << " " << c.p << " " << c.q << "\n";
    return os.str();
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Chord> chords;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "cd") {
            if (n >= 0) fail_parse("line " + std::to_string(lineno) + ": duplicate 'cd' header");
            if (!(ls >> n) || n < 0)
                fail_parse("line " + std::to_string(lineno) + ": expected 'cd <n>'");
        } else if (kw == "chord") {
            if (n < 0) fail_parse("line " + std::to_string(lineno) + ": 'chord' before 'cd' header");
            std::string id, pl, sg;
            int p, q;
            if (!(ls >> id >> pl >> sg >> p >> q))
                fail_parse("line " + std::to_string(lineno) +
                           ": expected 'chord <id> <I|O> <+|-> <p> <q>'");
            if (pl != "I" && pl != "O")
                fail_parse("line " + std::to_string(lineno) + ": placement must be I or O");
            if (sg != "+" && sg != "-")
                fail_parse("line " + std::to_string(lineno) + ": sign must be + or -");
            chords.push_back({id, pl == "I" ? Placement::Inner : Placement::Outer,
                              sg == "+" ? 1 : -1, p, q});
        } else {
            fail_parse("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (n < 0) fail_parse("missing 'cd <n>' header");
    if ((int)chords.size() != n)
        fail_parse("header declares " + std::to_string(n) + " chords but " +
                   std::to_string(chords.size()) + " given");
    try {
        return ChordDiagram(std::move(chords));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Domain) fail_parse(e.what());
        throw;
    }
}

bool ChordDiagram::operator==(const ChordDiagram& o) const {
    if (chords_.size() != o.chords_.size()) return false;
    for (size_t i = 0; i < chords_.size(); i++) {
        const Chord &a = chords_[i], &b = o.chords_[i];
        if (a.id != b.id || a.placement != b.placement || a.sign != b.sign || a.p != b.p ||
            a.q != b.q)
            return false;
    }
    return true;
}

}  // namespace mk

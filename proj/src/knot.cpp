#include "knot.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace mk {

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    for (auto& c : crossings_) {
        if (c.sign != 1 && c.sign != -1) fail_domain("crossing sign must be +1 or -1");
        if (c.over.empty() || c.under_in.empty() || c.under_out.empty())
            fail_domain("empty arc label in crossing");
    }
}

std::vector<std::string> KnotDiagram::arcs() const {
    std::set<std::string> s;
    for (auto& c : crossings_) {
        s.insert(c.over);
        s.insert(c.under_in);
        s.insert(c.under_out);
    }
    return {s.begin(), s.end()};
}

bool KnotDiagram::has_arc(const std::string& arc) const {
    for (auto& c : crossings_)
        if (c.over == arc || c.under_in == arc || c.under_out == arc) return true;
    return false;
}

int KnotDiagram::component_count() const {
    std::map<std::string, std::string> next;
    std::set<std::string> outs;
    for (auto& c : crossings_) {
        if (!next.emplace(c.under_in, c.under_out).second) return -1;
        if (!outs.insert(c.under_out).second) return -1;
    }
    for (auto& a : arcs())
        if (!next.count(a) || !outs.count(a)) return -1;
    std::set<std::string> seen;
    int comps = 0;
    for (auto& [start, _] : next) {
        if (seen.count(start)) continue;
        comps++;
        std::string x = start;
        while (seen.insert(x).second) x = next.at(x);
    }
    return comps;
}

KnotDiagram KnotDiagram::mirror() const {
    std::vector<Crossing> out = crossings_;
    for (auto& c : out) c.sign = -c.sign;
    return KnotDiagram(std::move(out));
}

std::string KnotDiagram::serialize() const {
    std::ostringstream os;
    int k = 0;
    for (auto& c : crossings_)
        os << "x c" << ++k << " " << (c.sign > 0 ? "+" : "-") << " " << c.over << " "
           << c.under_in << " " << c.under_out << "\n";
    return os.str();
}

KnotDiagram KnotDiagram::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<Crossing> crossings;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "x") {
            std::string id, sg, over, ui, uo;
            if (!(ls >> id >> sg >> over >> ui >> uo))
                fail_parse("line " + std::to_string(lineno) +
                           ": expected 'x <id> <sign> <over> <under-in> <under-out>'");
            if (sg != "+" && sg != "-")
                fail_parse("line " + std::to_string(lineno) + ": sign must be + or -");
            crossings.push_back({over, ui, uo, sg == "+" ? 1 : -1});
        } else if (kw == "boundary") {
            fail_parse("line " + std::to_string(lineno) +
                       ": 'boundary' belongs to tangle files, not knot files");
        } else {
            fail_parse("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    return KnotDiagram(std::move(crossings));
}

KnotDiagram chord_to_knot(const ChordDiagram& d) {
    int n2 = 2 * d.n();
    auto arc = [&](int i) { return "a" + std::to_string(((i % n2) + n2) % n2); };
    std::vector<Crossing> crossings;
    for (auto& c : d.chords()) {
        // calibrated clasp table: relator sign and over-arc side per (placement, sign)
        bool inner = c.placement == Placement::Inner;
        int eps = (inner == (c.sign < 0)) ? 1 : -1;
        bool over_at_y = c.sign < 0;  // else the over strand is arc y-1
        for (auto [x, y] : {std::pair{c.p, c.q}, std::pair{c.q, c.p}}) {
            std::string over = over_at_y ? arc(y) : arc(y - 1);
            crossings.push_back({over, arc(x - 1), arc(x), eps});
        }
    }
    KnotDiagram k(std::move(crossings));
    if (d.n() > 0 && k.component_count() != 1)
        fail_internal("chord reconstruction produced " +
                      std::to_string(k.component_count()) + " components");
    return k;
}

TanglePresentation cut_to_tangle(const KnotDiagram& k, const std::vector<std::string>& cut_arcs) {
    if (cut_arcs.empty()) fail_domain("at least one cut arc required");
    std::set<std::string> seen;
    for (auto& a : cut_arcs) {
        if (!k.has_arc(a)) fail_domain("unknown arc '" + a + "'");
        if (!seen.insert(a).second) fail_domain("cut arc '" + a + "' listed twice");
    }
    return {k, cut_arcs};
}

namespace {

struct UnionFind {
    std::map<std::string, std::string> parent;
    std::string find(const std::string& a) {
        auto it = parent.find(a);
        if (it == parent.end()) {
            parent[a] = a;
            return a;
        }
        if (it->second == a) return a;
        std::string r = find(it->second);
        parent[a] = r;
        return r;
    }
    void unite(const std::string& a, const std::string& b) { parent[find(a)] = find(b); }
};

}  // namespace

KnotDiagram duplicate(const TanglePresentation& t, const std::vector<int>& params) {
    const auto& cuts = t.boundary;
    if (params.size() + 1 != cuts.size())
        fail_domain("expected " + std::to_string(cuts.size() - 1) + " twist parameters, got " +
                    std::to_string(params.size()));
    auto m = [](const std::string& a) { return "m:" + a; };
    std::vector<Crossing> D = t.diagram.crossings();
    // mirror copy: signs flipped, orientation reversed (under roles swapped)
    std::vector<Crossing> M;
    for (auto& c : D) M.push_back({m(c.over), m(c.under_out), m(c.under_in), -c.sign});
    std::set<std::string> cutset(cuts.begin(), cuts.end());
    std::set<std::string> mcutset;
    for (auto& b : cuts) mcutset.insert(m(b));
    // split each cut arc into a tail piece (at its under_out role) and a head
    // piece (at its under_in role); over roles go with the tail in the original
    // copy and with the head in the mirror copy
    auto split = [](std::vector<Crossing>& cr, const std::set<std::string>& tags,
                    const std::string& prefix, bool over_to_tail) {
        for (auto& c : cr) {
            if (tags.count(c.over)) c.over = prefix + (over_to_tail ? "T:" : "H:") + c.over;
            if (tags.count(c.under_in)) c.under_in = prefix + "H:" + c.under_in;
            if (tags.count(c.under_out)) c.under_out = prefix + "T:" + c.under_out;
        }
    };
    split(D, cutset, "d", true);
    split(M, mcutset, "x", false);

    UnionFind uf;
    std::vector<Crossing> extra;
    for (size_t j = 0; j < cuts.size(); j++) {
        std::string dT = "dT:" + cuts[j], dH = "dH:" + cuts[j];
        std::string xT = "xT:" + m(cuts[j]), xH = "xH:" + m(cuts[j]);
        if (j == 0) {  // crossing-free join with the mirror copy
            uf.unite(dT, xH);
            uf.unite(xT, dH);
            continue;
        }
        int nj = params[j - 1];
        int nn = std::abs(nj), sg = nj > 0 ? 1 : -1;
        if (nn == 0) {
            uf.unite(dT, dH);
            uf.unite(xT, xH);
            continue;
        }
        auto seg = [&](char side, int i) {
            return "tw:" + std::to_string(j) + ":" + side + ":" + std::to_string(i);
        };
        // strand A (original copy) is over at even-indexed crossings of the region
        auto a_over = [](int i) { return i % 2 == 0; };
        std::vector<std::string> asegs{dT};
        for (int i = 0; i < nn; i++)
            if (!a_over(i)) asegs.push_back(seg('a', i));
        uf.unite(asegs.back(), dH);
        std::map<int, int> a_at;
        for (int i = 0, cur = 0; i < nn; i++) {
            a_at[i] = cur;
            if (!a_over(i)) cur++;
        }
        // strand B (mirror copy) traverses the region in the opposite direction
        std::vector<std::string> bsegs{xT};
        std::map<int, int> b_at;
        for (int i = nn - 1, cur = 0; i >= 0; i--) {
            b_at[i] = cur;
            if (a_over(i)) {
                bsegs.push_back(seg('b', i));
                cur++;
            }
        }
        uf.unite(bsegs.back(), xH);
        for (int i = 0; i < nn; i++) {
            if (a_over(i))
                extra.push_back({asegs[a_at[i]], bsegs[b_at[i]], bsegs[b_at[i] + 1], sg});
            else
                extra.push_back({bsegs[b_at[i]], asegs[a_at[i]], asegs[a_at[i] + 1], sg});
        }
    }
    std::vector<Crossing> all;
    for (auto* grp : {&D, &M, &extra})
        for (auto& c : *grp)
            all.push_back({uf.find(c.over), uf.find(c.under_in), uf.find(c.under_out), c.sign});
    // regenerate arc labels in order of first appearance
    std::map<std::string, std::string> rename;
    int k = 0;
    auto fresh = [&](const std::string& old) {
        auto it = rename.find(old);
        if (it != rename.end()) return it->second;
        return rename[old] = "a" + std::to_string(k++);
    };
    for (auto& c : all) {
        c.under_in = fresh(c.under_in);
        c.under_out = fresh(c.under_out);
    }
    for (auto& c : all) c.over = fresh(c.over);
    KnotDiagram result(std::move(all));
    int comps = result.component_count();
    if (comps != 1)
        fail_domain("duplicate produced a link (" + std::to_string(comps) + " components)");
    return result;
}

std::string serialize_tangle(const TanglePresentation& t) {
    std::ostringstream os;
    os << t.diagram.serialize() << "boundary";
    for (auto& b : t.boundary) os << " " << b;
    os << "\n";
    return os.str();
}

TanglePresentation parse_tangle(const std::string& text) {
    std::istringstream is(text);
    std::string line, knot_part;
    std::vector<std::string> boundary;
    bool saw_boundary = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        auto hash = line.find('#');
        std::string stripped = hash == std::string::npos ? line : line.substr(0, hash);
        std::istringstream ls(stripped);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "boundary") {
            if (saw_boundary) fail_parse("line " + std::to_string(lineno) + ": duplicate 'boundary'");
            saw_boundary = true;
            std::string arc;
            while (ls >> arc) boundary.push_back(arc);
        } else {
            knot_part += stripped + "\n";
        }
    }
    if (!saw_boundary) fail_parse("tangle file missing a 'boundary' line");
    KnotDiagram k = KnotDiagram::parse(knot_part);
    try {
        return cut_to_tangle(k, boundary);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Domain) fail_parse(e.what());
        throw;
    }
}

namespace {

bool pairing_search(const std::vector<Crossing>& cr, std::vector<bool>& used) {
    size_t i = 0;
    while (i < used.size() && used[i]) i++;
    if (i == used.size()) return true;
    used[i] = true;
    for (size_t j = i + 1; j < used.size(); j++) {
        if (used[j] || cr[i].sign != cr[j].sign) continue;
        std::set<std::string> ai{cr[i].over, cr[i].under_in, cr[i].under_out};
        if (!ai.count(cr[j].over) && !ai.count(cr[j].under_in) && !ai.count(cr[j].under_out))
            continue;
        used[j] = true;
        if (pairing_search(cr, used)) return true;
        used[j] = false;
    }
    used[i] = false;
    return false;
}

}  // namespace

bool has_matched_pairing(const KnotDiagram& k) {
    if (k.crossings().size() % 2 != 0) return false;
    std::vector<bool> used(k.crossings().size(), false);
    return pairing_search(k.crossings(), used);
}

}  // namespace mk

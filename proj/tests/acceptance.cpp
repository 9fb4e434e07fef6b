// Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "alexander.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "gfq.hpp"
#include "ideal.hpp"
#include "knot.hpp"
#include "random_diagrams.hpp"
#include "rational.hpp"

using mk::ChordDiagram;
using mk::EvenCF;
using mk::Ideal;
using mk::KnotDiagram;
using mk::LaurentPoly;

namespace {

int failures = 0;

void run(const char* what, bool (*fn)(std::string&)) {
    std::string note;
    bool ok = false;
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    std::printf("%s: %s%s%s\n", ok ? "PASS" : "FAIL", what, note.empty() ? "" : " -- ",
                note.c_str());
    if (!ok) failures++;
}

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

Ideal e_ideal(const KnotDiagram& k, int m) {
    return mk::elementary_ideal(mk::build_matrix_wirtinger(k), m);
}

std::vector<ChordDiagram> catalog_chord_diagrams() {
    std::vector<ChordDiagram> out;
    for (const char* n : {"unknot", "trefoil-cd", "figure8-cd"})
        out.push_back(std::get<ChordDiagram>(mk::catalog_get(n).payload));
    return out;
}

// twist-family ideals: E_2 of the n1 = 2k member equals (t^2 - t + 1, k)
bool c1(std::string&) {
    for (int k = 1; k <= 4; k++) {
        KnotDiagram d = std::get<KnotDiagram>(
            mk::catalog_get("milnor-fox:" + std::to_string(2 * k)).payload);
        Ideal e2 = e_ideal(d, 2);
        if (!e2.equals(Ideal({P("t^2 - t + 1"), LaurentPoly(k)}))) return false;
        if (e2.is_trivial() != (k == 1)) return false;
    }
    // the n1 = 4 member is the catalogued 10_140
    return std::get<KnotDiagram>(mk::catalog_get("10_140").payload).serialize() ==
           std::get<KnotDiagram>(mk::catalog_get("milnor-fox:4").payload).serialize();
}

// the first twist-family member: trivial E_2 and squared trefoil polynomial
bool c2(std::string&) {
    KnotDiagram d = std::get<KnotDiagram>(mk::catalog_get("8_20").payload);
    if (!e_ideal(d, 2).is_trivial()) return false;
    return mk::alexander_polynomial(mk::build_matrix_wirtinger(d)) ==
           P("1 - 2t + 3t^2 - 2t^3 + t^4");
}

// duplicating the duplicated trefoil again: E_2 stays trivial; E_1 recorded
bool c3(std::string& note) {
    KnotDiagram base = std::get<KnotDiagram>(mk::catalog_get("8_20").payload);
    auto arcs = base.arcs();
    for (size_t i = 0; i < arcs.size(); i++)
        for (size_t j = 0; j < arcs.size(); j++) {
            if (i == j) continue;
            KnotDiagram k;
            try {
                k = mk::duplicate(mk::cut_to_tangle(base, {arcs[i], arcs[j]}), {2});
            } catch (const mk::Error&) {
                continue;  // this cut yields a link
            }
            if (!e_ideal(k, 2).is_trivial()) return false;
            LaurentPoly a = mk::alexander_polynomial(mk::build_matrix_wirtinger(k));
            LaurentPoly sq = P("t^2 - t + 1");
            LaurentPoly expect = mk::lp_normalize(sq * sq * sq * sq);
            if (a == expect) note = "E_1 = ((t^2 - t + 1)^4)";
            else note = "E_1 recorded as (" + a.to_string() + "), cut-dependent";
            return true;
        }
    return false;  // no cut produced a knot
}

// rational diagrams carry a support chord and trivial E_2
bool c4(std::string& note) {
    std::vector<std::vector<long long>> cases;
    for (long long b1 : {-6, -4, -2, 2, 4, 6})
        for (long long b2 : {-6, -4, -2, 2, 4, 6}) cases.push_back({b1, b2});
    // length-4 expansions, capped at 6 chords to stay desk-scale
    for (long long b1 : {-4, -2, 2, 4})
        for (long long b2 : {-2, 2})
            for (long long b3 : {-2, 2})
                for (long long b4 : {-4, -2, 2, 4}) {
                    if ((std::abs(b1) + std::abs(b2) + std::abs(b3) + std::abs(b4)) / 2 > 6)
                        continue;
                    cases.push_back({b1, b2, b3, b4});
                }
    int checked = 0;
    for (auto& terms : cases) {
        mk::RationalDiagram rd = mk::rational_diagram(EvenCF{terms});
        auto sup = mk::support_chords(rd.diagram);
        if (sup.empty()) return false;
        if (std::find(sup.begin(), sup.end(), rd.support_id) == sup.end()) return false;
        if (!mk::elementary_ideal(mk::build_matrix_stencil(rd.diagram), 2).is_trivial())
            return false;
        checked++;
    }
    note = std::to_string(checked) + " continued fractions";
    return checked >= 40;
}

// nontrivial E_k of a chord-presented knot never contains t + 1
bool c5(std::string&) {
    std::vector<ChordDiagram> diagrams = catalog_chord_diagrams();
    std::mt19937 rng(101);
    for (int i = 0; i < 300; i++) diagrams.push_back(testutil::random_diagram(rng, 5));
    for (auto& d : diagrams) {
        mk::PresentationMatrix m = mk::build_matrix_stencil(d);
        for (int k = 1; k <= 2; k++) {
            Ideal e = mk::elementary_ideal(m, k);
            if (!e.is_trivial() && e.contains(P("t + 1"))) return false;
        }
    }
    return true;
}

// stencil and Wirtinger presentations give identical elementary ideals
bool c6(std::string&) {
    std::vector<ChordDiagram> diagrams = catalog_chord_diagrams();
    std::mt19937 rng(103);
    for (int i = 0; i < 300; i++) diagrams.push_back(testutil::random_diagram(rng, 5));
    for (auto& d : diagrams) {
        mk::PresentationMatrix ms = mk::build_matrix_stencil(d);
        mk::PresentationMatrix mw = mk::build_matrix_wirtinger(mk::chord_to_knot(d));
        for (int m = 1; m <= 3; m++)
            if (!mk::elementary_ideal(ms, m).equals(mk::elementary_ideal(mw, m))) return false;
    }
    return true;
}

// fixed reference matrix for the two-chord trefoil diagram
bool c7(std::string&) {
    std::vector<std::vector<LaurentPoly>> ref = {
        {P("-1"), P("t"), P("0"), P("1 - t")},
        {P("0"), P("1 - t"), P("-1"), P("t")},
        {P("t"), P("1 - t"), P("0"), P("-1")},
        {P("0"), P("-1"), P("t"), P("1 - t")},
    };
    ChordDiagram d = ChordDiagram::parse("cd 2\nchord 1 O + 0 2\nchord 2 I - 1 3\n");
    mk::PresentationMatrix m = mk::build_matrix_stencil(d);
    if (m.rows() != 4 || m.cols() != 4) return false;
    // search for a row/column permutation matching the reference
    std::vector<int> rows{0, 1, 2, 3};
    bool matched = false;
    do {
        std::vector<int> cols{0, 1, 2, 3};
        do {
            bool ok = true;
            for (int r = 0; r < 4 && ok; r++)
                for (int c = 0; c < 4 && ok; c++)
                    if (ref[r][c] != m.entries[rows[r]][cols[c]]) ok = false;
            if (ok) matched = true;
        } while (!matched && std::next_permutation(cols.begin(), cols.end()));
    } while (!matched && std::next_permutation(rows.begin(), rows.end()));
    if (!matched) return false;
    mk::PresentationMatrix refm{m.row_labels, m.col_labels, ref};
    for (int k = 1; k <= 3; k++)
        if (!mk::elementary_ideal(refm, k).equals(mk::elementary_ideal(m, k))) return false;
    return true;
}

// structural invariants of the presentation matrix on random diagrams
bool c8(std::string&) {
    std::mt19937 rng(107);
    for (int i = 0; i < 500; i++) {
        ChordDiagram d = testutil::random_diagram(rng, 5);
        KnotDiagram k = mk::chord_to_knot(d);
        if ((int)k.crossings().size() != 2 * d.n()) return false;
        if ((int)k.arcs().size() != 2 * d.n()) return false;
        mk::PresentationMatrix m = mk::build_matrix_stencil(d);
        for (int r = 0; r < m.rows(); r++) {
            LaurentPoly s;
            for (auto& e : m.entries[r]) s += e;
            if (!s.is_zero()) return false;
        }
        if (!mk::det_up_to_unit(m.entries).is_zero()) return false;
        LaurentPoly a = mk::alexander_polynomial(m);
        auto [num, den] = a.eval_at(1);
        if (den != 1 || (num != 1 && num != -1)) return false;
        LaurentPoly rev;
        for (auto& [e, c] : a.coeffs()) rev += LaurentPoly::monomial(c, -e);
        if (mk::lp_normalize(rev) != a) return false;
        Ideal prev = mk::elementary_ideal(m, 1);
        for (int km = 2; km <= 3; km++) {
            Ideal next = mk::elementary_ideal(m, km);
            for (auto& g : prev.generators())
                if (!next.contains(g)) return false;
            prev = next;
        }
    }
    return true;
}

// chord operations applied at a support chord preserve it; op2 additionally
// certifies its new chord (applied elsewhere they can destroy support status,
// so the property is tested where the constructions use it)
bool c9(std::string& note) {
    std::mt19937 rng(109);
    std::uniform_int_distribution<int> coin(0, 1);
    auto is_support = [](const ChordDiagram& cd, const std::string& id) {
        auto sup = mk::support_chords(cd);
        return std::find(sup.begin(), sup.end(), id) != sup.end();
    };
    int applications = 0;
    while (applications < 200) {
        ChordDiagram d = testutil::random_diagram(rng, 4);
        auto sup = mk::support_chords(d);
        if (sup.empty()) continue;
        std::uniform_int_distribution<int> pick(0, (int)sup.size() - 1);
        std::string tracked = sup[pick(rng)];
        int sign = coin(rng) ? 1 : -1;
        std::string added;
        ChordDiagram nd;
        if (coin(rng)) {
            const mk::Chord& c = d.chord(tracked);
            nd = d.apply_op1(tracked, sign, &added,
                             coin(rng) ? std::optional<int>(c.q) : std::nullopt);
        } else {
            nd = d.apply_op2(tracked, sign, &added);
            if (!is_support(nd, added)) return false;
        }
        if (!is_support(nd, tracked)) return false;
        applications++;
    }
    note = "200 applications at the tracked chord";
    return true;
}

// ideal-engine verdicts with the modular cross-check
bool c10(std::string&) {
    struct Case {
        std::vector<const char*> gens;
        bool trivial;
    };
    std::vector<Case> cases = {
        {{"t"}, true},
        {{"2", "t - 1"}, false},
        {{"t + 2", "t - 2"}, true},  // proper in Z[t], trivial over Laurent
        {{"t^2 - t + 1"}, false},
        {{"t^2 - t + 1", "t + 1"}, false},
    };
    for (auto& c : cases) {
        std::vector<LaurentPoly> gens;
        for (auto* g : c.gens) gens.push_back(P(g));
        Ideal i(gens);
        if (i.is_trivial() != c.trivial) return false;
        if (gfq::has_modular_zero(gens) && i.is_trivial()) return false;
    }
    if (Ideal({P("t^2 - t + 1")}).contains(P("t + 1"))) return false;
    if (!Ideal({P("t^2 - t + 1"), P("t + 1")}).contains(P("3"))) return false;
    return true;
}

}  // namespace

int main() {
    run("twist-family second ideals equal (t^2 - t + 1, k), nontrivial iff k >= 2", c1);
    run("8-crossing twist knot: trivial E_2, squared trefoil polynomial", c2);
    run("second duplication keeps E_2 trivial", c3);
    run("rational diagrams: certified support chord and trivial E_2", c4);
    run("nontrivial E_k excludes t + 1 (catalog + 300 random diagrams)", c5);
    run("stencil/Wirtinger ideal equality for m = 1,2,3 (catalog + 300 random)", c6);
    run("reference presentation matrix matches up to row/column permutation", c7);
    run("matrix invariants on 500 random diagrams", c8);
    run("chord operations preserve support chords (200 applications)", c9);
    run("ideal-engine verdicts with modular cross-check", c10);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}

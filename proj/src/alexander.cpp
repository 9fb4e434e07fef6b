#include "alexander.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace mk {

LaurentPoly fox_derivative(const Word& word, const std::string& gen) {
    LaurentPoly row;
    LaurentPoly prefix(1);
    for (auto& [g, e] : word) {
        int steps = std::abs(e);
        int dir = e >= 0 ? 1 : -1;
        for (int i = 0; i < steps; i++) {
            if (dir == 1) {
                if (g == gen) row += prefix;
                prefix *= LaurentPoly::t(1);
            } else {
                prefix *= LaurentPoly::t(-1);
                if (g == gen) row -= prefix;
            }
        }
    }
    return row;
}

std::string PresentationMatrix::to_string() const {
    std::vector<std::vector<std::string>> cells(rows() + 1);
    cells[0].push_back("");
    for (auto& c : col_labels) cells[0].push_back(c);
    for (int i = 0; i < rows(); i++) {
        cells[i + 1].push_back(row_labels[i]);
        for (auto& e : entries[i]) cells[i + 1].push_back(e.to_string());
    }
    std::vector<size_t> width(cols() + 1, 0);
    for (auto& row : cells)
        for (size_t j = 0; j < row.size(); j++) width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    for (auto& row : cells) {
        for (size_t j = 0; j < row.size(); j++) {
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
            os << (j + 1 == row.size() ? "\n" : "  ");
        }
    }
    return os.str();
}

PresentationMatrix build_matrix_wirtinger(const KnotDiagram& k) {
    PresentationMatrix m;
    m.col_labels = k.arcs();
    std::map<std::string, int> col;
    for (int j = 0; j < (int)m.col_labels.size(); j++) col[m.col_labels[j]] = j;
    int idx = 0;
    for (auto& c : k.crossings()) {
        Word w{{c.over, c.sign}, {c.under_in, 1}, {c.over, -c.sign}, {c.under_out, -1}};
        std::vector<LaurentPoly> row(m.col_labels.size());
        for (auto& gen : std::set<std::string>{c.over, c.under_in, c.under_out})
            row[col[gen]] = fox_derivative(w, gen);
        m.entries.push_back(std::move(row));
        m.row_labels.push_back("x" + std::to_string(++idx));
    }
    return m;
}

std::vector<std::vector<LaurentPoly>> chord_stencil(Placement placement, int sign) {
    LaurentPoly T = LaurentPoly::t(1), one(1);
    bool inner = placement == Placement::Inner;
    if (inner && sign < 0)
        return {{T, -one, LaurentPoly(), one - T}, {LaurentPoly(), one - T, T, -one}};
    if (inner && sign > 0)
        return {{one, -T, T - one, LaurentPoly()}, {T - one, LaurentPoly(), one, -T}};
    if (!inner && sign > 0)
        return {{T, -one, one - T, LaurentPoly()}, {one - T, LaurentPoly(), T, -one}};
    return {{one, -T, LaurentPoly(), T - one}, {LaurentPoly(), T - one, one, -T}};
}

PresentationMatrix build_matrix_stencil(const ChordDiagram& d) {
    int n2 = 2 * d.n();
    PresentationMatrix m;
    for (int j = 0; j < n2; j++) m.col_labels.push_back("a" + std::to_string(j));
    for (auto& c : d.chords()) {
        auto st = chord_stencil(c.placement, c.sign);
        int pos[4] = {(c.p - 1 + n2) % n2, c.p, (c.q - 1 + n2) % n2, c.q};
        for (int r = 0; r < 2; r++) {
            std::vector<LaurentPoly> row(n2);
            for (int j = 0; j < 4; j++) row[pos[j]] += st[r][j];  // adjacent arcs may coincide
            m.entries.push_back(std::move(row));
            m.row_labels.push_back(c.id + "." + std::to_string(r + 1));
        }
    }
    return m;
}

LaurentPoly det_up_to_unit(std::vector<std::vector<LaurentPoly>> m) {
    int n = (int)m.size();
    if (n == 0) return LaurentPoly(1);
    for (auto& row : m) {
        if ((int)row.size() != n) fail_internal("determinant of a non-square matrix");
        int lo = 0;
        for (auto& e : row)
            if (!e.is_zero()) lo = std::min(lo, e.min_exp());
        if (lo < 0)
            for (auto& e : row) e = e.shifted(-lo);
    }
    LaurentPoly prev(1);
    for (int k = 0; k < n; k++) {
        int piv = -1;
        for (int i = k; i < n; i++)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) return LaurentPoly();
        if (piv != k) std::swap(m[piv], m[k]);
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                bool ok;
                m[i][j] = num.divide_exact(prev, ok);
                if (!ok) fail_internal("fraction-free elimination division failed");
            }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

namespace {

// Eliminate unit entries by unimodular row/column operations and delete their
// row and column; each elimination lowers the requested minor order by one and
// preserves every elementary ideal. Returns the remaining order (0 means the
// ideal is already the unit ideal).
int unit_pivot_reduce(std::vector<std::vector<LaurentPoly>>& m, int order) {
    while (order > 0) {
        int pi = -1, pj = -1;
        for (int i = 0; i < (int)m.size() && pi < 0; i++)
            for (int j = 0; j < (int)(m[i].size()) && pi < 0; j++)
                if (m[i][j].is_unit()) { pi = i; pj = j; }
        if (pi < 0) break;
        // scale the pivot row so the pivot is 1 (unit scaling)
        {
            const auto& u = m[pi][pj];
            LaurentPoly inv = LaurentPoly::monomial(u.coeffs().begin()->second, -u.min_exp());
            for (auto& e : m[pi]) e *= inv;
        }
        for (int i = 0; i < (int)m.size(); i++) {
            if (i == pi || m[i][pj].is_zero()) continue;
            LaurentPoly f = m[i][pj];
            for (int j = 0; j < (int)m[i].size(); j++) m[i][j] -= f * m[pi][j];
        }
        // the pivot column is now zero outside the pivot row; clearing the pivot
        // row by column operations touches nothing else, so just drop both
        m.erase(m.begin() + pi);
        for (auto& row : m) row.erase(row.begin() + pj);
        order--;
    }
    return order;
}

void enumerate_minors(const std::vector<std::vector<LaurentPoly>>& m, int order,
                      std::set<LaurentPoly>& out, bool* unit_found) {
    int r = (int)m.size(), c = r == 0 ? 0 : (int)m[0].size();
    if (order > r || order > c) return;
    std::vector<int> rsel(order), csel(order);
    for (int i = 0; i < order; i++) rsel[i] = i;
    auto next_combo = [](std::vector<int>& sel, int limit) {
        int k = (int)sel.size();
        for (int i = k - 1; i >= 0; i--) {
            if (sel[i] < limit - (k - i)) {
                sel[i]++;
                for (int j = i + 1; j < k; j++) sel[j] = sel[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (int i = 0; i < order; i++) csel[i] = i;
        do {
            std::vector<std::vector<LaurentPoly>> sub(order, std::vector<LaurentPoly>(order));
            for (int i = 0; i < order; i++)
                for (int j = 0; j < order; j++) sub[i][j] = m[rsel[i]][csel[j]];
            LaurentPoly d = det_up_to_unit(std::move(sub));
            if (d.is_zero()) continue;
            if (d.is_unit()) {
                if (unit_found) { *unit_found = true; return; }
            }
            out.insert(lp_normalize(d));
        } while (next_combo(csel, c));
    } while (next_combo(rsel, r));
}

}  // namespace

Ideal elementary_ideal(const PresentationMatrix& q, int m) {
    if (m < 0) fail_domain("elementary ideal index must be >= 0");
    int order = q.cols() - m;
    if (order <= 0) return Ideal({LaurentPoly(1)});
    if (order > q.rows()) return Ideal({});
    auto entries = q.entries;
    order = unit_pivot_reduce(entries, order);
    if (order == 0) return Ideal({LaurentPoly(1)});
    if (order > (int)entries.size()) return Ideal({});
    std::set<LaurentPoly> minors;
    bool unit_found = false;
    enumerate_minors(entries, order, minors, &unit_found);
    if (unit_found) return Ideal({LaurentPoly(1)});
    return Ideal({minors.begin(), minors.end()});
}

LaurentPoly alexander_polynomial(const PresentationMatrix& q) {
    int order = q.cols() - 1;
    if (order <= 0) return LaurentPoly(1);
    if (order > q.rows()) fail_domain("matrix has too few rows for an Alexander polynomial");
    auto entries = q.entries;
    order = unit_pivot_reduce(entries, order);
    if (order == 0) return LaurentPoly(1);
    if (order > (int)entries.size()) fail_domain("matrix has too few rows for an Alexander polynomial");
    std::set<LaurentPoly> minors;
    enumerate_minors(entries, order, minors, nullptr);
    LaurentPoly g;
    for (auto& d : minors) g = g.is_zero() ? d : lp_gcd(g, d);
    if (g.is_zero()) fail_domain("all minors vanish; E_1 is the zero ideal");
    return lp_normalize(g);
}

std::vector<std::string> support_chords(const ChordDiagram& d) {
    PresentationMatrix q = build_matrix_stencil(d);
    int n2 = q.cols();
    std::vector<std::string> result;
    for (auto& c : d.chords()) {
        std::vector<std::vector<LaurentPoly>> rows;
        for (int i = 0; i < q.rows(); i++) {
            const std::string& lbl = q.row_labels[i];
            if (lbl == c.id + ".1" || lbl == c.id + ".2") continue;
            rows.push_back(q.entries[i]);
        }
        std::set<LaurentPoly> sink;
        bool unit_found = false;
        enumerate_minors(rows, n2 - 2, sink, &unit_found);
        if (unit_found) result.push_back(c.id);
    }
    return result;
}

Theorem1Report theorem1_check(const ChordDiagram& d, int k) {
    Ideal ek = elementary_ideal(build_matrix_stencil(d), k);
    if (ek.is_trivial()) return {true, false};
    bool member = ek.contains(LaurentPoly(1) + LaurentPoly::t(1));
    if (member)
        fail_internal("t + 1 found in a nontrivial elementary ideal of a bipartite diagram");
    return {false, false};
}

}  // namespace mk

#include "laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace mk {

void LaurentPoly::trim() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) it = coeffs_.erase(it);
        else ++it;
    }
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_unit() const {
    if (coeffs_.size() != 1) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

const Int& LaurentPoly::coeff(int exp) const {
    static const Int zero = 0;
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? zero : it->second;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) fail_domain("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) fail_domain("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) {
        Int& dst = coeffs_[e];
        dst += c;
        if (dst == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.coeffs_) {
        Int& dst = coeffs_[e];
        dst -= c;
        if (dst == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : coeffs_)
        for (auto& [e2, c2] : o.coeffs_) {
            Int& dst = r.coeffs_[e1 + e2];
            dst += c1 * c2;
        }
    r.trim();
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    return coeffs_ < o.coeffs_;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d, bool& ok) const {
    ok = false;
    if (d.is_zero()) return LaurentPoly();
    if (is_zero()) { ok = true; return LaurentPoly(); }
    // shift both to ordinary polynomials; the quotient is then shift-adjusted
    LaurentPoly a = shifted(-min_exp());
    LaurentPoly b = d.shifted(-d.min_exp());
    int qshift = min_exp() - d.min_exp();
    LaurentPoly q;
    const Int& lead = b.coeffs_.rbegin()->second;
    int blead = b.coeffs_.rbegin()->first;
    while (!a.is_zero()) {
        int ae = a.max_exp();
        if (ae < blead) return LaurentPoly();
        const Int& ac = a.coeffs_.rbegin()->second;
        if (ac % lead != 0) return LaurentPoly();
        LaurentPoly term = monomial(ac / lead, ae - blead);
        q += term;
        a -= term * b;
    }
    ok = true;
    return q.shifted(qshift);
}

bool LaurentPoly::divisible_by(const LaurentPoly& d) const {
    bool ok;
    divide_exact(d, ok);
    return ok;
}

bool LaurentPoly::associate_of(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (coeffs_.size() != o.coeffs_.size()) return false;
    return lp_normalize(*this) == lp_normalize(o);
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (auto& [e, c] : coeffs_) g = boost::multiprecision::gcd(g, c);
    if (g < 0) g = -g;
    return g;
}

std::pair<Int, Int> LaurentPoly::eval_at(long long x) const {
    if (is_zero()) return {0, 1};
    int lo = min_exp();
    int shift = lo < 0 ? -lo : 0;
    Int num = 0;
    for (auto& [e, c] : coeffs_) {
        Int p = 1;
        for (int i = 0; i < e + shift; i++) p *= x;
        num += c * p;
    }
    Int den = 1;
    for (int i = 0; i < shift; i++) den *= x;
    return {num, den};
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << ac;
        } else {
            if (ac != 1) os << ac;
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace((unsigned char)text[i])) i++; };
    skip();
    if (i >= n) fail_parse("empty polynomial");
    bool any = false;
    while (true) {
        skip();
        if (i >= n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            i++;
            skip();
        } else if (any) {
            fail_parse("expected '+' or '-' between monomials at offset " + std::to_string(i));
        }
        Int coeff = 1;
        bool saw_digits = false;
        if (i < n && std::isdigit((unsigned char)text[i])) {
            std::string digits;
            while (i < n && std::isdigit((unsigned char)text[i])) digits += text[i++];
            coeff = Int(digits);
            saw_digits = true;
        }
        skip();
        if (i < n && text[i] == '*') { i++; skip(); }
        int exp = 0;
        if (i < n && text[i] == 't') {
            i++;
            exp = 1;
            if (i < n && text[i] == '^') {
                i++;
                bool neg = false;
                if (i < n && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
                if (i >= n || !std::isdigit((unsigned char)text[i])) fail_parse("malformed exponent");
                std::string digits;
                while (i < n && std::isdigit((unsigned char)text[i])) digits += text[i++];
                exp = std::stoi(digits);
                if (neg) exp = -exp;
            }
        } else if (!saw_digits) {
            fail_parse("expected monomial at offset " + std::to_string(i));
        }
        result += monomial(sign * coeff, exp);
        any = true;
    }
    if (!any) fail_parse("empty polynomial");
    return result;
}

LaurentPoly lp_normalize(const LaurentPoly& a) {
    if (a.is_zero()) fail_domain("lp_normalize: zero input");
    LaurentPoly r = a.shifted(-a.min_exp());
    if (r.coeff(0) < 0) r = -r;
    return r;
}

namespace {

// dense Z[t] helpers for the subresultant remainder sequence
using Dense = std::vector<Int>;

Dense to_dense(const LaurentPoly& p) {
    Dense d(p.is_zero() ? 0 : p.max_exp() - p.min_exp() + 1);
    if (!p.is_zero()) {
        int lo = p.min_exp();
        for (auto& [e, c] : p.coeffs()) d[e - lo] = c;
    }
    return d;
}

LaurentPoly from_dense(const Dense& d) {
    LaurentPoly r;
    for (size_t i = 0; i < d.size(); i++)
        if (d[i] != 0) r += LaurentPoly::monomial(d[i], (int)i);
    return r;
}

void strip(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Int dense_content(const Dense& d) {
    Int g = 0;
    for (auto& c : d) g = boost::multiprecision::gcd(g, c);
    if (g < 0) g = -g;
    return g;
}

void divide_content(Dense& d, const Int& g) {
    if (g == 0 || g == 1) return;
    for (auto& c : d) c /= g;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
Dense pseudo_rem(Dense a, const Dense& b) {
    strip(a);
    int db = (int)b.size() - 1;
    const Int& lb = b.back();
    while ((int)a.size() - 1 >= db && !a.empty()) {
        int da = (int)a.size() - 1;
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; i++) a[da - db + i] -= la * b[i];
        strip(a);
    }
    return a;
}

// primitive gcd of primitive inputs via subresultant-style PRS with content removal
Dense primitive_gcd(Dense a, Dense b) {
    strip(a); strip(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_rem(a, b);
        divide_content(r, dense_content(r));
        a = std::move(b);
        b = std::move(r);
    }
    divide_content(a, dense_content(a));
    return a;
}

}  // namespace

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) fail_domain("lp_gcd(0, 0)");
    if (a.is_zero()) return lp_normalize(b);
    if (b.is_zero()) return lp_normalize(a);
    Int ca = a.content(), cb = b.content();
    Int cg = boost::multiprecision::gcd(ca, cb);
    Dense da = to_dense(a), db = to_dense(b);
    divide_content(da, ca);
    divide_content(db, cb);
    Dense g = primitive_gcd(std::move(da), std::move(db));
    LaurentPoly r = from_dense(g) * LaurentPoly(cg);
    return lp_normalize(r);
}

}  // namespace mk

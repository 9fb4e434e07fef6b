#include "rational.hpp"

#include <numeric>

#include "error.hpp"

namespace mk {

EvenCF even_cf(long long p, long long q) {
    if (q == 0) fail_domain("denominator must be nonzero");
    if (p == 0) fail_domain("p/q must be nonzero");
    if (std::gcd(p, q) != 1) fail_domain("p and q must be coprime");
    if (std::abs(p) >= std::abs(q)) fail_domain("|p/q| must be < 1");
    EvenCF cf;
    // state: remaining fraction num/den with |num/den| < 1; expand 1/(num/den)
    Int num = p, den = q;
    if (den < 0) { den = -den; num = -num; }
    long long limit = std::abs(q) + 2;
    for (long long step = 0; num != 0; step++) {
        if (step > limit)
            fail_domain("no even continued fraction within the step limit "
                        "(p and q both odd have none)");
        // reciprocal den/num; nearest even integer, ties toward the larger value
        Int n2 = den, d2 = num;
        if (d2 < 0) { d2 = -d2; n2 = -n2; }
        // floor(n2 / (2*d2)) * 2
        Int fl;
        if (n2 >= 0) fl = n2 / (2 * d2);
        else fl = -Int((-n2 + 2 * d2 - 1) / (2 * d2));
        Int e1 = 2 * fl, e2 = e1 + 2;
        Int r1 = n2 - e1 * d2, r2 = n2 - e2 * d2;  // r1 >= 0 > r2 (in units of 1/d2)
        Int b = (r1 < -r2) ? e1 : e2;              // tie (r1 == -r2): pick e2, remainder < 0
        if (b == 0) b = (e2 == 0) ? e1 : e2;       // terms must be nonzero
        cf.terms.push_back((long long)b);
        // new fraction: reciprocal - b = (n2 - b*d2) / d2
        num = n2 - b * d2;
        den = d2;
    }
    return cf;
}

std::pair<Int, Int> cf_value(const EvenCF& cf) {
    if (cf.terms.empty()) fail_domain("empty continued fraction");
    for (auto b : cf.terms)
        if (b == 0 || b % 2 != 0) fail_domain("continued fraction terms must be even and nonzero");
    // value = 1/(b1 + 1/(b2 + ...)); evaluate from the tail as num/den
    Int num = 0, den = 1;
    for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
        // v' = 1 / (b + num/den) = den / (b*den + num)
        Int nnum = den, nden = Int(*it) * den + num;
        if (nden == 0) fail_domain("malformed continued fraction (division by zero)");
        num = nnum;
        den = nden;
    }
    Int g = boost::multiprecision::gcd(num, den);
    if (g != 0) { num /= g; den /= g; }
    if (den < 0) { den = -den; num = -num; }
    return {num, den};
}

namespace {
int sgn(long long x) { return x > 0 ? 1 : -1; }
}

RationalDiagram rational_diagram(const EvenCF& cf) {
    if (cf.terms.empty()) fail_domain("empty continued fraction");
    if (cf.terms.size() % 2 != 0)
        fail_domain("odd-length even continued fraction encodes a rational link, not a knot");
    std::vector<long long> a;
    for (auto b : cf.terms) {
        if (b == 0 || b % 2 != 0) fail_domain("continued fraction terms must be even and nonzero");
        a.push_back(b / 2);
    }
    std::vector<std::pair<long long, long long>> pairs;
    for (size_t i = 0; i < a.size(); i += 2) pairs.emplace_back(a[i], a[i + 1]);

    auto [a1, a2] = pairs.back();
    // base: elementary diagram, outer sign = sgn(a1), inner sign = sgn(a2)
    ChordDiagram d(std::vector<Chord>{{"1", Placement::Outer, sgn(a1), 0, 2},
                                      {"2", Placement::Inner, sgn(a2), 1, 3}});
    // the certificate is the latest chord added by op2 (or a base chord): op2's
    // new chord is always a support chord and op1 preserves that status, while
    // an op1-added chord itself need not be one
    std::string outer = "1", cert = "2", tmp;
    for (long long i = 1; i < std::abs(a2); i++) d = d.apply_op1(outer, sgn(a2), &tmp);
    for (long long i = 1; i < std::abs(a1); i++) {
        d = d.apply_op2(outer, sgn(a1), &cert);
        outer = cert;
    }
    for (auto it = pairs.rbegin() + 1; it != pairs.rend(); ++it) {
        auto [b1, b2] = *it;
        d = d.apply_op2(outer, sgn(b1), &cert);
        outer = cert;
        for (long long i = 0; i < std::abs(b2); i++) d = d.apply_op1(outer, sgn(b2), &tmp);
        for (long long i = 1; i < std::abs(b1); i++) {
            d = d.apply_op2(outer, sgn(b1), &cert);
            outer = cert;
        }
    }
    return {std::move(d), cert};
}

}  // namespace mk

#include "ideal.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "error.hpp"

namespace mk {

namespace {

std::atomic<long long> g_work_limit{1'000'000};

// monomial t^a s^b; degree-then-lex order with t > s
struct Mono {
    int a = 0, b = 0;
};
struct MonoLess {
    bool operator()(const Mono& x, const Mono& y) const {
        int dx = x.a + x.b, dy = y.a + y.b;
        if (dx != dy) return dx < dy;
        return x.a < y.a;
    }
};
bool mono_divides(const Mono& d, const Mono& m) { return d.a <= m.a && d.b <= m.b; }
Mono mono_sub(const Mono& m, const Mono& d) { return {m.a - d.a, m.b - d.b}; }
Mono mono_lcm(const Mono& x, const Mono& y) { return {std::max(x.a, y.a), std::max(x.b, y.b)}; }

using BiPoly = std::map<Mono, Int, MonoLess>;

void bp_add_term(BiPoly& p, const Mono& m, const Int& c) {
    if (c == 0) return;
    Int& dst = p[m];
    dst += c;
    if (dst == 0) p.erase(m);
}

// p -= c * X^shift * q
void bp_sub_scaled(BiPoly& p, const Int& c, const Mono& shift, const BiPoly& q) {
    for (auto& [m, qc] : q) bp_add_term(p, {m.a + shift.a, m.b + shift.b}, -c * qc);
}

BiPoly bp_from_laurent(const LaurentPoly& f) {
    BiPoly p;
    for (auto& [e, c] : f.coeffs()) {
        Mono m = e >= 0 ? Mono{e, 0} : Mono{0, -e};
        bp_add_term(p, m, c);
    }
    return p;
}

LaurentPoly bp_to_laurent(const BiPoly& p) {
    LaurentPoly f;
    for (auto& [m, c] : p) f += LaurentPoly::monomial(c, m.a - m.b);
    return f;
}

struct Budget {
    long long steps = 0;
    long long limit;
    Budget() : limit(g_work_limit.load()) {}
    void tick() {
        if (++steps > limit)
            fail_work_limit("ideal computation exceeded the work limit of " +
                            std::to_string(limit) + " reduction steps");
    }
};

// Euclidean quotient minimizing the remainder: c = q*b + r with |r| <= |b|/2.
Int balanced_quot(const Int& c, const Int& b) {
    Int q = c / b;
    Int r = c - q * b;
    Int ab = b < 0 ? Int(-b) : b;
    if (2 * r > ab) q += (b > 0 ? 1 : -1);
    else if (2 * r < -ab) q -= (b > 0 ? 1 : -1);
    return q;
}

// Multivariate division with balanced integer remainders; returns the normal form.
BiPoly normal_form(BiPoly f, const std::vector<BiPoly>& basis, Budget& budget) {
    BiPoly rem;
    while (!f.empty()) {
        Mono mu = f.rbegin()->first;
        bool progress = true;
        while (progress) {
            auto it = f.find(mu);
            if (it == f.end()) break;
            progress = false;
            for (const BiPoly& g : basis) {
                auto git = f.find(mu);
                if (git == f.end()) break;
                const Mono& beta = g.rbegin()->first;
                if (!mono_divides(beta, mu)) continue;
                Int q = balanced_quot(git->second, g.rbegin()->second);
                if (q == 0) continue;
                budget.tick();
                bp_sub_scaled(f, q, mono_sub(mu, beta), g);
                progress = true;
            }
        }
        auto it = f.find(mu);
        if (it != f.end()) {
            rem[mu] = it->second;
            f.erase(it);
        }
    }
    return rem;
}

bool reduces_to_zero(const BiPoly& f, const std::vector<BiPoly>& basis, Budget& budget) {
    return normal_form(f, basis, budget).empty();
}

// Strong Groebner basis over Z: Buchberger closed under S-polynomials and
// G-polynomials (gcd combinations of leading coefficients).
std::vector<BiPoly> strong_groebner(std::vector<BiPoly> gens, Budget& budget) {
    std::vector<BiPoly> basis;
    for (auto& g : gens)
        if (!g.empty()) basis.push_back(std::move(g));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); i++)
        for (size_t j = i + 1; j < basis.size(); j++) pairs.emplace_back(i, j);
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; i++) pairs.emplace_back(i, k);
    };
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const BiPoly &f = basis[i], &g = basis[j];
        const Mono &alpha = f.rbegin()->first, &beta = g.rbegin()->first;
        const Int &a = f.rbegin()->second, &b = g.rbegin()->second;
        Mono gamma = mono_lcm(alpha, beta);
        Int d = boost::multiprecision::gcd(a, b);
        Int l = a / d * b;  // lcm up to sign
        // S-polynomial
        {
            BiPoly s;
            bp_sub_scaled(s, -(l / a), mono_sub(gamma, alpha), f);
            bp_sub_scaled(s, l / b, mono_sub(gamma, beta), g);
            BiPoly h = normal_form(std::move(s), basis, budget);
            if (!h.empty()) {
                if (h.rbegin()->second < 0)
                    for (auto& [m, c] : h) c = -c;
                basis.push_back(std::move(h));
                push_pairs(basis.size() - 1);
            }
        }
        // G-polynomial, needed only when neither leading coefficient divides the other
        if (a % b != 0 && b % a != 0) {
            Int u, v;  // extended gcd: d = u*a + v*b
            {
                Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    Int q = r0 / r1;
                    Int r2 = r0 - q * r1; r0 = r1; r1 = r2;
                    Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
                    Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
                }
                if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
                u = s0; v = t0;
            }
            BiPoly gp;
            bp_sub_scaled(gp, -u, mono_sub(gamma, alpha), f);
            bp_sub_scaled(gp, -v, mono_sub(gamma, beta), g);
            BiPoly h = normal_form(std::move(gp), basis, budget);
            if (!h.empty()) {
                if (h.rbegin()->second < 0)
                    for (auto& [m, c] : h) c = -c;
                basis.push_back(std::move(h));
                push_pairs(basis.size() - 1);
            }
        }
    }
    return basis;
}

}  // namespace

struct Ideal::Impl {
    std::vector<BiPoly> basis;
};

long long Ideal::work_limit() { return g_work_limit.load(); }

void Ideal::set_work_limit(long long limit) {
    if (limit <= 0) fail_domain("work limit must be positive");
    g_work_limit.store(limit);
}

Ideal::Ideal(std::vector<LaurentPoly> gens) {
    std::set<LaurentPoly> seen;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        LaurentPoly n = lp_normalize(g);
        if (seen.insert(n).second) gens_.push_back(std::move(n));
    }
    // deterministic order: simplest generators first
    std::sort(gens_.begin(), gens_.end(), [](const LaurentPoly& x, const LaurentPoly& y) {
        if (x.term_count() != y.term_count()) return x.term_count() < y.term_count();
        return x < y;
    });
    for (auto& g : gens_)
        if (g.is_unit()) { trivial_ = true; return; }
    if (gens_.empty()) return;
    if (gens_.size() == 1) { single_ = true; return; }

    Budget budget;
    std::vector<BiPoly> lifted;
    lifted.push_back({{{1, 1}, 1}, {{0, 0}, -1}});  // ts - 1
    for (auto& g : gens_) {
        BiPoly bg = bp_from_laurent(g);
        if (reduces_to_zero(bg, lifted, budget)) continue;  // redundant generator
        lifted.push_back(std::move(bg));
    }
    auto impl = std::make_shared<Impl>();
    impl->basis = strong_groebner(std::move(lifted), budget);
    impl_ = std::move(impl);
    trivial_ = !reduces_to_zero(bp_from_laurent(LaurentPoly(1)), impl_->basis, budget)
                   ? false
                   : true;
}

bool Ideal::contains(const LaurentPoly& f) const {
    if (f.is_zero()) return true;
    if (trivial_) return true;
    if (gens_.empty()) return false;
    if (single_) return f.divisible_by(gens_[0]);
    Budget budget;
    return reduces_to_zero(bp_from_laurent(lp_normalize(f)), impl_->basis, budget);
}

bool Ideal::equals(const Ideal& o) const {
    for (auto& g : gens_)
        if (!o.contains(g)) return false;
    for (auto& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

std::vector<LaurentPoly> Ideal::basis() const {
    if (trivial_) return {LaurentPoly(1)};
    if (!impl_) return gens_;
    // minimalize for display: drop elements whose leading term is strongly
    // divisible (monomial and coefficient) by another kept element's
    std::vector<const BiPoly*> sorted;
    for (auto& b : impl_->basis) sorted.push_back(&b);
    std::sort(sorted.begin(), sorted.end(), [](const BiPoly* x, const BiPoly* y) {
        const Mono &mx = x->rbegin()->first, &my = y->rbegin()->first;
        if (MonoLess{}(mx, my)) return true;
        if (MonoLess{}(my, mx)) return false;
        Int ax = boost::multiprecision::abs(x->rbegin()->second);
        Int ay = boost::multiprecision::abs(y->rbegin()->second);
        if (ax != ay) return ax < ay;
        if (x->size() != y->size()) return x->size() < y->size();
        LaurentPoly lx = bp_to_laurent(*x), ly = bp_to_laurent(*y);
        if (lx.is_zero() || ly.is_zero()) return ly.is_zero() && !lx.is_zero();
        return lp_normalize(lx) < lp_normalize(ly);
    });
    std::vector<const BiPoly*> kept;
    for (auto* p : sorted) {
        bool redundant = false;
        for (auto* h : kept) {
            if (mono_divides(h->rbegin()->first, p->rbegin()->first) &&
                p->rbegin()->second % h->rbegin()->second == 0) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(p);
    }
    std::set<LaurentPoly> out;
    for (auto* bp : kept) {
        const BiPoly& b = *bp;
        LaurentPoly f = bp_to_laurent(b);
        if (!f.is_zero()) out.insert(lp_normalize(f));
    }
    std::vector<LaurentPoly> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), [](const LaurentPoly& x, const LaurentPoly& y) {
        if (x.term_count() != y.term_count()) return x.term_count() < y.term_count();
        return x < y;
    });
    return res;
}

}  // namespace mk

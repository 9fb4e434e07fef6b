#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace mk {

using Int = boost::multiprecision::cpp_int;

// Element of Z[t, t^-1] in canonical sparse form: exponent -> nonzero coefficient.
// The zero polynomial is the empty map, so value equality is representation equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c != 0) coeffs_[0] = c; }
    LaurentPoly(Int c) { if (c != 0) coeffs_[0] = std::move(c); }

    static LaurentPoly monomial(Int coeff, int exp);
    static LaurentPoly t(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    // Units of Z[t,t^-1] are exactly +-t^k.
    bool is_unit() const;
    bool is_one() const;

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int exp) const;

    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    size_t term_count() const { return coeffs_.size(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }
    // Total order used for canonical sorting of generator lists.
    bool operator<(const LaurentPoly& o) const;

    LaurentPoly shifted(int k) const;  // multiply by t^k

    // Exact division; sets ok=false (and returns 0) if the division has a remainder.
    LaurentPoly divide_exact(const LaurentPoly& d, bool& ok) const;
    bool divisible_by(const LaurentPoly& d) const;

    // a ~ b up to a unit factor +-t^k
    bool associate_of(const LaurentPoly& o) const;

    // gcd of integer coefficients, nonnegative; 0 for the zero polynomial
    Int content() const;

    // Evaluation at an integer point (t = x, x != 0 if negative exponents present),
    // returned as a pair (num, den) with den = x^k clearing negative exponents.
    std::pair<Int, Int> eval_at(long long x) const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    std::map<int, Int> coeffs_;
    void trim();
    friend struct LaurentOps;
};

// Canonical representative under unit multiplication: minimal exponent 0 and
// positive constant term. Rejects zero.
LaurentPoly lp_normalize(const LaurentPoly& a);

// gcd in Z[t,t^-1], reported in lp_normalize form. Not both zero.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace mk

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "alexander.hpp"
#include "error.hpp"
#include "rational.hpp"

using mk::ChordDiagram;
using mk::EvenCF;
using mk::Int;
using mk::LaurentPoly;

namespace {

bool both_odd(long long p, long long q) { return (p % 2 != 0) && (q % 2 != 0); }

}  // namespace

TEST_CASE("even continued fraction examples") {
    CHECK(mk::even_cf(2, 3).terms == std::vector<long long>{2, -2});
    CHECK(mk::even_cf(2, 5).terms == std::vector<long long>{2, 2});
    CHECK(mk::even_cf(4, 7).terms == std::vector<long long>{2, -4});
    auto [p, q] = mk::cf_value(EvenCF{{4, 2}});
    CHECK(p == 2);
    CHECK(q == 9);
}

TEST_CASE("even continued fraction validation") {
    CHECK_THROWS_AS(mk::even_cf(0, 5), mk::Error);    // p = 0
    CHECK_THROWS_AS(mk::even_cf(2, 0), mk::Error);    // q = 0
    CHECK_THROWS_AS(mk::even_cf(5, 3), mk::Error);    // |p/q| >= 1
    CHECK_THROWS_AS(mk::even_cf(3, 3), mk::Error);
    CHECK_THROWS_AS(mk::even_cf(2, 4), mk::Error);    // not coprime
    CHECK_THROWS_AS(mk::even_cf(3, 5), mk::Error);    // both odd: no even expansion
    CHECK_THROWS_AS(mk::even_cf(1, 3), mk::Error);
    CHECK_THROWS_AS(mk::cf_value(EvenCF{{}}), mk::Error);
    CHECK_THROWS_AS(mk::cf_value(EvenCF{{3, 2}}), mk::Error);  // odd term
    CHECK_THROWS_AS(mk::cf_value(EvenCF{{0, 2}}), mk::Error);  // zero term
}

TEST_CASE("even continued fraction round-trip") {
    for (long long q = 2; q <= 200; q++) {
        for (long long p : {1LL, -1LL, q / 2, -(q / 2), q - 1, -(q - 1)}) {
            if (p == 0 || std::gcd(p, q) != 1) continue;
            if (both_odd(p, q)) {
                CHECK_THROWS_AS(mk::even_cf(p, q), mk::Error);
                continue;
            }
            EvenCF cf = mk::even_cf(p, q);
            for (long long b : cf.terms) {
                CHECK(b != 0);
                CHECK(b % 2 == 0);
            }
            auto [rp, rq] = mk::cf_value(cf);
            CHECK(rp * q == rq * p);
        }
    }
}

TEST_CASE("rational diagrams: structure") {
    for (auto& [p, q] : std::vector<std::pair<long long, long long>>{
             {2, 3}, {2, 5}, {4, 7}, {2, 7}, {4, 9}, {8, 13}, {-2, 3}, {12, 17}}) {
        EvenCF cf = mk::even_cf(p, q);
        if (cf.terms.size() % 2 != 0) continue;  // only even-length expansions map to knots
        mk::RationalDiagram rd = mk::rational_diagram(cf);
        long long total = 0;
        for (long long b : cf.terms) total += (b < 0 ? -b : b);
        CHECK(2 * (long long)rd.diagram.n() == total);  // each chord gives two crossings
        CHECK(!rd.support_id.empty());
        // the certificate chord really is a support chord
        auto sup = mk::support_chords(rd.diagram);
        CHECK(std::find(sup.begin(), sup.end(), rd.support_id) != sup.end());
        // hence E_2 is trivial
        CHECK(mk::elementary_ideal(mk::build_matrix_stencil(rd.diagram), 2).is_trivial());
    }
}

TEST_CASE("rational diagrams: determinant equals the denominator") {
    for (auto& [p, q] : std::vector<std::pair<long long, long long>>{
             {2, 3}, {2, 5}, {4, 7}, {4, 9}, {8, 13}, {12, 17}, {16, 21}}) {
        EvenCF cf = mk::even_cf(p, q);
        if (cf.terms.size() % 2 != 0) continue;
        mk::RationalDiagram rd = mk::rational_diagram(cf);
        LaurentPoly a = mk::alexander_polynomial(mk::build_matrix_stencil(rd.diagram));
        auto [num, den] = a.eval_at(-1);
        Int d = num < 0 ? Int(-num) : num;
        if (den < 0) d = -d;
        CHECK(d == q);
        CHECK(d % 2 == 1);  // knot determinants are odd
    }
}

TEST_CASE("rational diagram validation") {
    CHECK_THROWS_AS(mk::rational_diagram(EvenCF{{2}}), mk::Error);       // odd length
    CHECK_THROWS_AS(mk::rational_diagram(EvenCF{{2, 2, 2}}), mk::Error);
    CHECK_THROWS_AS(mk::rational_diagram(EvenCF{{2, 3}}), mk::Error);    // odd term
    CHECK_THROWS_AS(mk::rational_diagram(EvenCF{{}}), mk::Error);
}

TEST_CASE("known rational knots") {
    // [2,-2] -> trefoil, [2,2] -> figure-eight, [2,2,2,2] -> 6_1-type values
    CHECK(mk::alexander_polynomial(
              mk::build_matrix_stencil(mk::rational_diagram(EvenCF{{2, -2}}).diagram)) ==
          LaurentPoly::parse("1 - t + t^2"));
    CHECK(mk::alexander_polynomial(
              mk::build_matrix_stencil(mk::rational_diagram(EvenCF{{2, 2}}).diagram)) ==
          LaurentPoly::parse("1 - 3t + t^2"));
    auto [p, q] = mk::cf_value(EvenCF{{2, 2, 2, 2}});
    mk::RationalDiagram rd = mk::rational_diagram(EvenCF{{2, 2, 2, 2}});
    auto [num, den] = mk::alexander_polynomial(mk::build_matrix_stencil(rd.diagram)).eval_at(-1);
    CHECK((num < 0 ? Int(-num) : num) == q);
}

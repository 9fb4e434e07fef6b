#include <doctest.h>

#include <random>

#include "error.hpp"
#include "gfq.hpp"
#include "ideal.hpp"

using mk::Ideal;
using mk::LaurentPoly;

namespace {

LaurentPoly P(const std::string& s) { return LaurentPoly::parse(s); }

Ideal I(std::initializer_list<const char*> gens) {
    std::vector<LaurentPoly> v;
    for (auto* g : gens) v.push_back(P(g));
    return Ideal(std::move(v));
}

// checks the modular-falsification oracle agrees with the triviality verdict
void check_against_oracle(const Ideal& ideal) {
    if (gfq::has_modular_zero(ideal.generators())) CHECK(!ideal.is_trivial());
}

}  // namespace

TEST_CASE("construction basics") {
    Ideal zero({});
    CHECK(zero.is_zero());
    CHECK(!zero.is_trivial());
    CHECK(zero.contains(LaurentPoly()));
    CHECK(!zero.contains(P("1")));

    CHECK(I({"t^3"}).is_trivial());           // unit generator
    CHECK(I({"0", "t^3"}).is_trivial());      // zero generators discarded
    CHECK(I({"t^2 - t + 1", "2t"}).equals(I({"t^2 - t + 1", "2"})));
}

TEST_CASE("triviality verdicts") {
    CHECK(I({"t"}).is_trivial());
    Ideal two_tm1 = I({"2", "t - 1"});
    CHECK(!two_tm1.is_trivial());
    check_against_oracle(two_tm1);
    // proper in Z[t] but trivial in the Laurent ring
    CHECK(I({"t + 2", "t - 2"}).is_trivial());
}

TEST_CASE("membership") {
    CHECK(!I({"t^2 - t + 1"}).contains(P("t + 1")));
    CHECK(I({"t^2 - t + 1", "t + 1"}).contains(P("3")));
    CHECK(I({"2", "t - 1"}).contains(LaurentPoly()));
    CHECK(I({"t^2 - t + 1"}).contains(P("t^3 + 1")));
    CHECK(I({"t^2 - t + 1"}).contains(P("t^-1 - 1 + t")));  // unit multiple
}

TEST_CASE("equality") {
    CHECK(I({"t^2 - t + 1", "2t"}).equals(I({"2", "t^2 - t + 1"})));
    CHECK(!I({"2", "t - 1"}).equals(I({"1"})));
    CHECK(Ideal({}).equals(Ideal({})));
    CHECK(!Ideal({}).equals(I({"2"})));
}

TEST_CASE("query invariance and saturation") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4), nterm(1, 3);
    auto rnd = [&] {
        LaurentPoly p;
        int k = nterm(rng);
        for (int i = 0; i < k; i++) p += LaurentPoly::monomial(coeff(rng), exp(rng));
        return p;
    };
    for (int trial = 0; trial < 25; trial++) {
        LaurentPoly a = rnd(), b = rnd(), f = rnd();
        if (a.is_zero() || b.is_zero()) continue;
        Ideal i1({a, b});
        Ideal i2({b.shifted(2), -a.shifted(-1)});  // unit multiples, reordered
        CHECK(i1.is_trivial() == i2.is_trivial());
        CHECK(i1.contains(f) == i2.contains(f));
        // saturation: t*g and t^-1*g are members
        CHECK(i1.contains(a.shifted(1)));
        CHECK(i1.contains(a.shifted(-1)));
        CHECK(i1.contains(b.shifted(-1)));
        // monotonicity: adding a generator keeps every member
        Ideal bigger({a, b, f});
        CHECK(bigger.contains(a * f + b));
        if (i1.contains(f)) CHECK(bigger.contains(f));
        check_against_oracle(i1);
    }
}

TEST_CASE("is_trivial agrees with contains(1)") {
    for (auto& gens : std::vector<std::vector<const char*>>{
             {"t"}, {"2", "t - 1"}, {"t + 2", "t - 2"}, {"t^2 - t + 1", "t + 1"},
             {"t^2 - t + 1", "2"}, {"3", "5"}, {"6", "10", "15"}}) {
        std::vector<LaurentPoly> v;
        for (auto* g : gens) v.push_back(P(g));
        Ideal i(v);
        CHECK(i.is_trivial() == i.contains(P("1")));
        check_against_oracle(i);
    }
    CHECK(I({"3", "5"}).is_trivial());
    CHECK(I({"6", "10", "15"}).is_trivial());
    CHECK(!I({"6", "10"}).is_trivial());
}

TEST_CASE("work limit") {
    long long saved = Ideal::work_limit();
    Ideal::set_work_limit(5);
    CHECK_THROWS_AS(I({"t^2 - t + 1", "t^3 + t - 7", "5t^4 - 3"}), mk::Error);
    Ideal::set_work_limit(saved);
    CHECK_THROWS_AS(Ideal::set_work_limit(0), mk::Error);
}

TEST_CASE("basis display is canonical") {
    auto b = I({"t^2 - t + 1", "2t"}).basis();
    REQUIRE(!b.empty());
    for (auto& g : b) CHECK(mk::lp_normalize(g) == g);
    auto b2 = I({"2", "t^2 - t + 1"}).basis();
    CHECK(b == b2);
}

#include <doctest.h>

#include "starsurf/rational.hpp"
#include "starsurf/errors.hpp"

#include <random>

using namespace starsurf;

namespace {

Poly t1() { return Poly::coordinate(1); }
Poly t2() { return Poly::coordinate(2); }
Poly C(long n) { return Poly::constant(n); }

Poly random_poly(std::mt19937_64& rng, int max_deg, int max_terms) {
    Poly p;
    int nterms = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < nterms; ++i) {
        int e1 = static_cast<int>(rng() % (max_deg + 1));
        int e2 = static_cast<int>(rng() % (max_deg + 1));
        long c = static_cast<long>(rng() % 7) - 3;
        p.add_term({e1, e2}, c);
    }
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly p = t1() * t1() + t2().scaled(3) - C(1);
    CHECK(p.degree(1) == 2);
    CHECK(p.degree(2) == 1);
    CHECK(p.derivative(1) == t1().scaled(2));
    CHECK(p.derivative(2) == C(3));
    CHECK((p - p).is_zero());
    CHECK(p.str() == "t1^2 + 3*t2 - 1");
}

TEST_CASE("poly_divide is exact division") {
    Poly a = (t1() + C(1)) * (t2() * t2() - C(2));
    auto q = poly_divide(a, t1() + C(1));
    REQUIRE(q.has_value());
    CHECK(*q == t2() * t2() - C(2));
    CHECK(!poly_divide(a, t1() + C(2)).has_value());
}

TEST_CASE("poly_gcd on bivariate products") {
    Poly g = t1() * t2() + C(1);
    Poly a = g * (t1() + C(2));
    Poly b = g * (t2() * t2() + t1());
    Poly got = poly_gcd(a, b);
    CHECK(got == g);  // g is already monic under lex

    // gcd of coprime polynomials is 1
    CHECK(poly_gcd(t1() + C(1), t2() + C(1)) == C(1));
    // content interaction: common factor lives in t1 only
    Poly c = (t1() + C(1)) * t2();
    Poly d = (t1() + C(1)) * (t1() + t2());
    CHECK(poly_gcd(c, d) == t1() + C(1));
}

TEST_CASE("poly_gcd randomized: divides both arguments") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 60; ++iter) {
        Poly g = random_poly(rng, 2, 3);
        Poly a = random_poly(rng, 2, 3);
        Poly b = random_poly(rng, 2, 3);
        Poly ga = g * a;
        Poly gb = g * b;
        Poly got = poly_gcd(ga, gb);
        if (ga.is_zero() && gb.is_zero()) {
            CHECK(got.is_zero());
            continue;
        }
        CHECK(poly_divide(ga, got).has_value());
        CHECK(poly_divide(gb, got).has_value());
        if (!g.is_zero() && !ga.is_zero() && !gb.is_zero()) {
            // the declared common factor divides the gcd
            CHECK(poly_divide(got, poly_gcd(got, g)).has_value());
            CHECK(poly_gcd(got, g) == poly_gcd(g, g));
        }
    }
}

TEST_CASE("rational functions normalize") {
    RationalFunc r(t1() * t2() + t2(), t2());  // (t1 t2 + t2)/t2 = t1 + 1
    CHECK(r.is_polynomial());
    CHECK(r.num() == t1() + C(1));

    RationalFunc s(C(1), t2().scaled(2));  // 1/(2 t2) -> den monic
    CHECK(s.den() == t2());
    CHECK(s.num() == Poly::constant(Rat(1, 2)));
}

TEST_CASE("rational arithmetic is a field") {
    RationalFunc x = RationalFunc::coordinate(1);
    RationalFunc y = RationalFunc::coordinate(2);
    RationalFunc a = (x + RationalFunc::constant(1)) / y;
    RationalFunc b = y / (x + RationalFunc::constant(1));
    CHECK((a * b).is_one());
    CHECK((a - a).is_zero());
    CHECK(a + b == b + a);
    CHECK(a.inverse() == b * (y * y) / (y * y));  // same value, same normal form
    CHECK_THROWS_AS(RationalFunc().inverse(), NotInvertibleError);
}

TEST_CASE("rational derivative quotient rule") {
    // d/dt2 (1/t2) = -1/t2^2
    RationalFunc inv_y = RationalFunc(C(1), t2());
    CHECK(inv_y.derivative(2) == RationalFunc(C(-1), t2() * t2()));
    // d/dt1 of t2-only function vanishes
    CHECK(inv_y.derivative(1).is_zero());
}

TEST_CASE("randomized field identities") {
    std::mt19937_64 rng(7);
    int done = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Poly pn = random_poly(rng, 2, 2);
        Poly pd = random_poly(rng, 2, 2);
        Poly qn = random_poly(rng, 2, 2);
        Poly qd = random_poly(rng, 2, 2);
        if (pd.is_zero() || qd.is_zero()) continue;
        RationalFunc p(pn, pd), q(qn, qd);
        CHECK(p * q == q * p);
        CHECK((p + q) * (p - q) == p * p - q * q);
        // derivative is a derivation
        CHECK((p * q).derivative(1) == p.derivative(1) * q + p * q.derivative(1));
        ++done;
    }
    CHECK(done > 20);
}

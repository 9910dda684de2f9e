#include <doctest.h>

#include "starsurf/errors.hpp"
#include "starsurf/exact_scalar.hpp"

#include <random>

using namespace starsurf;

namespace {

ExactScalar T1(int N) { return ExactScalar::coordinate(1, N); }
ExactScalar T2(int N) { return ExactScalar::coordinate(2, N); }
ExactScalar Xi(int a, int N) { return ExactScalar::grassmann(a, N); }

// independent expansion of the Moyal series for Grassmann-free scalars,
// written directly from the bidifferential formula
RationalFunc moyal_term(const RationalFunc& f, const RationalFunc& g, int n) {
    Rat nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    RationalFunc acc;
    Rat binom = 1;
    for (int k = 0; k <= n; ++k) {
        RationalFunc df = f, dg = g;
        for (int i = 0; i < n - k; ++i) df = df.derivative(1);
        for (int i = 0; i < k; ++i) df = df.derivative(2);
        for (int i = 0; i < k; ++i) dg = dg.derivative(1);
        for (int i = 0; i < n - k; ++i) dg = dg.derivative(2);
        RationalFunc p = df * dg;
        if (k & 1) p = -p;
        acc += p.scaled(binom);
        binom = binom * (n - k) / (k + 1);
    }
    return acc.scaled(1 / nfact);
}

ExactScalar random_scalar(std::mt19937_64& rng, int N, int P, bool homogeneous = false,
                          Parity want = kEven) {
    ExactScalar s(N);
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        int h = static_cast<int>(rng() % (N + 1));
        GrassMask m = static_cast<GrassMask>(rng() % (1u << P));
        if (homogeneous && grass_parity(m) != want) {
            if (P == 0) continue;
            m ^= 1;  // flip xi1 to fix the parity
            if (grass_parity(m) != want) continue;
        }
        Poly p;
        int ne = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < ne; ++i) {
            p.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)},
                       static_cast<long>(rng() % 5) - 2);
        }
        s.add_term(h, m, RationalFunc(std::move(p)));
    }
    return s;
}

} // namespace

TEST_CASE("addition examples") {
    int N = 3;
    CHECK(add(T1(N), neg(T1(N))).is_zero());
    CHECK(add(Xi(1, N), Xi(1, N)) == scalar_mul(2, Xi(1, N)));

    ExactScalar a(N);
    a.add_term(1, 0, RationalFunc::coordinate(2));       // hbar t2
    a.add_term(0, 0b11, RationalFunc::constant(1));      // xi1 xi2
    ExactScalar expect = a;
    expect.add_term(0, 0, RationalFunc::coordinate(2));  // + t2
    CHECK(add(a, T2(N)) == expect);

    CHECK_THROWS_AS(add(T1(2), T1(3)), OrderMismatchError);
}

TEST_CASE("star product first order") {
    int N = 2;
    // t1 * t2 = t1 t2 + hbar ; t2 * t1 = t1 t2 - hbar
    ExactScalar t1t2 = star(T1(N), T2(N));
    ExactScalar expect = ExactScalar::from_rational(
        RationalFunc(Poly::coordinate(1) * Poly::coordinate(2)), N);
    CHECK(t1t2 == add(expect, ExactScalar::hbar(N)));
    CHECK(star(T2(N), T1(N)) == sub(expect, ExactScalar::hbar(N)));
}

TEST_CASE("star product matches the raw bidifferential series") {
    int N = 4;
    RationalFunc f = RationalFunc(Poly::coordinate(1) * Poly::coordinate(1) +
                                  Poly::coordinate(2).scaled(3));
    RationalFunc g = RationalFunc(Poly::constant(1), Poly::coordinate(2)) *
                     RationalFunc(Poly::coordinate(1));
    ExactScalar got = star(ExactScalar::from_rational(f, N), ExactScalar::from_rational(g, N));
    ExactScalar want(N);
    for (int n = 0; n <= N; ++n) want.add_term(n, 0, moyal_term(f, g, n));
    CHECK(got == want);
}

TEST_CASE("star product grassmann rules") {
    int N = 1;
    CHECK(star(Xi(1, N), Xi(1, N)).is_zero());
    CHECK(star(Xi(2, N), Xi(1, N)) == neg(star(Xi(1, N), Xi(2, N))));
    ExactScalar xi12(N);
    xi12.add_term(0, 0b11, RationalFunc::constant(1));
    CHECK(star(Xi(1, N), Xi(2, N)) == xi12);
}

TEST_CASE("same-variable star is pointwise") {
    int N = 3;
    ExactScalar a = star(star(T2(N), T2(N)), star(T2(N), star(T2(N), T2(N))));
    ExactScalar expect(N);
    expect.add_term(0, 0, RationalFunc(Poly::monomial({0, 5}, 1)));
    CHECK(a == expect);
}

TEST_CASE("derive examples") {
    int N = 2;
    ExactScalar xi12(N);
    xi12.add_term(0, 0b11, RationalFunc::constant(1));
    CHECK(derive(FrameIndex::odd(1), xi12) == Xi(2, N));
    CHECK(derive(FrameIndex::odd(2), xi12) == neg(Xi(1, N)));
    CHECK(derive(FrameIndex::odd(1), derive(FrameIndex::odd(1), xi12)).is_zero());

    // d/dt1 (t1^2 t2) = 2 t1 t2
    ExactScalar p = ExactScalar::from_rational(RationalFunc(Poly::monomial({2, 1}, 1)), N);
    CHECK(derive(FrameIndex::even(1), p) ==
          ExactScalar::from_rational(RationalFunc(Poly::monomial({1, 1}, 2)), N));
}

TEST_CASE("star inverse") {
    int N = 3;
    ExactScalar a = add(ExactScalar::one(N), star(Xi(1, N), Xi(2, N)));
    ExactScalar inv = star_inverse(a);
    CHECK(inv == sub(ExactScalar::one(N), star(Xi(1, N), Xi(2, N))));
    CHECK(star(a, inv).is_one());
    CHECK(star(inv, a).is_one());

    CHECK(star_inverse(T2(N)) ==
          ExactScalar::from_rational(RationalFunc(Poly::constant(1), Poly::coordinate(2)), N));
    CHECK_THROWS_AS(star_inverse(Xi(1, N)), NotInvertibleError);

    // mixed body + hbar + soul
    ExactScalar b(N);
    b.add_term(0, 0, RationalFunc(Poly::coordinate(1) + Poly::constant(2)));
    b.add_term(1, 0, RationalFunc::coordinate(2));
    b.add_term(0, 0b1, RationalFunc::coordinate(1));
    ExactScalar binv = star_inverse(b);
    CHECK(star(b, binv).is_one());
    CHECK(star(binv, b).is_one());
}

TEST_CASE("unit and associativity on random triples") {
    std::mt19937_64 rng(20240809);
    for (int iter = 0; iter < 40; ++iter) {
        int N = 1 + static_cast<int>(rng() % 4);  // N <= 4
        int P = static_cast<int>(rng() % 3);      // P <= 2
        ExactScalar a = random_scalar(rng, N, P);
        ExactScalar b = random_scalar(rng, N, P);
        ExactScalar c = random_scalar(rng, N, P);
        CHECK(star(ExactScalar::one(N), a) == a);
        CHECK(star(a, ExactScalar::one(N)) == a);
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
    }
}

TEST_CASE("graded Leibniz rule") {
    std::mt19937_64 rng(99);
    std::vector<FrameIndex> frame = {FrameIndex::even(1), FrameIndex::even(2),
                                     FrameIndex::odd(1), FrameIndex::odd(2)};
    for (int iter = 0; iter < 40; ++iter) {
        int N = 2, P = 2;
        Parity pa = (rng() & 1) ? kOdd : kEven;
        Parity pb = (rng() & 1) ? kOdd : kEven;
        ExactScalar a = random_scalar(rng, N, P, true, pa);
        ExactScalar b = random_scalar(rng, N, P, true, pb);
        for (const auto& I : frame) {
            ExactScalar lhs = derive(I, star(a, b));
            ExactScalar rhs = add(star(derive(I, a), b),
                                  scalar_mul(koszul(I.parity(), pa), star(a, derive(I, b))));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("classical limit and supercommutativity mod hbar") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 30; ++iter) {
        int N = 3, P = 2;
        Parity pa = (rng() & 1) ? kOdd : kEven;
        Parity pb = (rng() & 1) ? kOdd : kEven;
        ExactScalar a = random_scalar(rng, N, P, true, pa);
        ExactScalar b = random_scalar(rng, N, P, true, pb);
        ExactScalar ab = star(a, b);
        ExactScalar ba = star(b, a);
        // super-commutator vanishes mod hbar
        ExactScalar comm = sub(ab, scalar_mul(koszul(pa, pb), ba));
        for (const auto& [key, f] : comm.terms()) CHECK(key.hpow >= 1);
        // hbar^0 part of the product is the pointwise graded product
        ExactScalar a0(N), b0(N);
        for (const auto& [key, f] : a.terms())
            if (key.hpow == 0) a0.add_term(0, key.mask, f);
        for (const auto& [key, f] : b.terms())
            if (key.hpow == 0) b0.add_term(0, key.mask, f);
        auto classical = star(a0, b0).classical_part();
        CHECK(ab.classical_part() == classical);
    }
}

TEST_CASE("parity bookkeeping") {
    int N = 2;
    CHECK(parity_of(Xi(1, N)) == kOdd);
    CHECK(parity_of(star(Xi(1, N), Xi(2, N))) == kEven);
    CHECK(parity_of(ExactScalar::hbar(N)) == kEven);
    ExactScalar mixed = add(Xi(1, N), ExactScalar::one(N));
    CHECK(!parity_of(mixed).has_value());
    CHECK(parity_of(ExactScalar::zero(N)) == kEven);
}

#include <doctest.h>

#include "classical_oracle.hpp"
#include "starsurf/geometry.hpp"
#include "starsurf/random_metric.hpp"

using namespace starsurf;

namespace {

Metric<ExactScalar> flat_metric(int P, int N) {
    Surface surf = Surface::make(P, N);
    Mat<ExactScalar> g = make_mat(surf.D(), ExactScalar::zero(N));
    for (int i = 0; i < 2; ++i) g[i][i] = ExactScalar::one(N);
    if (P == 2) {
        g[2][3] = ExactScalar::one(N);
        g[3][2] = neg(ExactScalar::one(N));
    }
    return make_metric(surf, kEven, g);
}

// double-warp shape with polynomial entries: g11 = f(t2), g22 = h(t1)
Metric<ExactScalar> warped_metric(int N) {
    Surface surf = Surface::make(0, N);
    Mat<ExactScalar> g = make_mat(2, ExactScalar::zero(N));
    RationalFunc f(Poly::constant(1) + Poly::coordinate(2) * Poly::coordinate(2));
    RationalFunc h(Poly::constant(2) + Poly::coordinate(1) * Poly::coordinate(1));
    g[0][0] = ExactScalar::from_rational(f, N);
    g[1][1] = ExactScalar::from_rational(h, N);
    return make_metric(surf, kEven, g);
}

} // namespace

TEST_CASE("flat metric: inverse, christoffel and curvature vanish") {
    for (int P : {0, 2}) {
        Metric<ExactScalar> m = flat_metric(P, 3);
        int D = m.surf.D();
        CHECK(m.graded_symmetric);
        Christoffel<ExactScalar> c = christoffel(m);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                for (int k = 0; k < D; ++k) {
                    CHECK(c.low.at(i, j, k).is_zero());
                    CHECK(c.mixed.at(i, j, k).is_zero());
                }
        Curvature<ExactScalar> r = curvature_commutator(m, c);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                for (int k = 0; k < D; ++k)
                    for (int l = 0; l < D; ++l) {
                        CHECK(r.up.at(i, j, k, l).is_zero());
                        CHECK(r.up_tilde.at(i, j, k, l).is_zero());
                    }
        Mat<ExactScalar> ric = ricci(r);
        CHECK(mat_is_zero(ric));
        CHECK(scalar_curvature(ric, m).is_zero());
        Table5<ExactScalar> rp = covariant_derivative_curvature(r, c);
        CHECK(rp.at(0, 0, 1, 0, 1).is_zero());
        CheckReport rep = check_identities(m);
        CHECK(rep.all_applicable_pass());
    }
}

TEST_CASE("pairing is the bilinear extension of g") {
    Metric<ExactScalar> m = warped_metric(2);
    const Surface& surf = m.surf;
    ExactScalar zero = ExactScalar::zero(2), one = ExactScalar::one(2);
    VectorField<ExactScalar> e1 = frame_field(surf, 0, zero, one, true);
    VectorField<ExactScalar> e1r = frame_field(surf, 0, zero, one, false);
    VectorField<ExactScalar> e2r = frame_field(surf, 1, zero, one, false);
    CHECK(pairing(e1, e1r, m) == m.g[0][0]);
    CHECK(pairing(e1, e2r, m).is_zero());

    ExactScalar a = ExactScalar::coordinate(1, 2);
    ExactScalar b = add(ExactScalar::coordinate(2, 2), ExactScalar::one(2));
    VectorField<ExactScalar> Z{true, {a, zero}};
    VectorField<ExactScalar> W{false, {b, zero}};
    CHECK(pairing(Z, W, m) == star(star(a, m.g[0][0]), b));
}

TEST_CASE("warped polynomial metric at hbar^0 matches the classical oracle") {
    int N = 2;
    Metric<ExactScalar> m = warped_metric(N);
    std::array<std::array<RationalFunc, 2>, 2> gc;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gc[i][j] = m.g[i][j].body();
    classical::Geometry cl = classical::compute(gc);

    // inverse metric
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto part = m.ginv[i][j].classical_part();
            RationalFunc got = part.count(0) ? part[0] : RationalFunc();
            CHECK(got == cl.ginv[i][j]);
        }
    Christoffel<ExactScalar> c = christoffel(m);
    Curvature<ExactScalar> r = curvature_commutator(m, c);
    Mat<ExactScalar> ric = ricci(r);
    ExactScalar s = scalar_curvature(ric, m);
    auto h0 = [](const ExactScalar& x) {
        auto part = x.classical_part();
        return part.count(0) ? part[0] : RationalFunc();
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            for (int l = 0; l < 2; ++l)
                CHECK(h0(c.mixed.at(i, j, l)) == cl.gamma_mixed[i][j][l]);
            CHECK(h0(ric[i][j]) == cl.ricci[i][j]);
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(h0(r.up.at(i, j, k, l)) == cl.riemann[i][j][k][l]);
        }
    CHECK(h0(s) == cl.scalar);

    CheckReport rep = check_identities(m);
    CHECK(rep.all_applicable_pass());
}

TEST_CASE("frame case of the connections") {
    Metric<ExactScalar> m = warped_metric(2);
    const Surface& surf = m.surf;
    Christoffel<ExactScalar> c = christoffel(m);
    ExactScalar zero = ExactScalar::zero(2), one = ExactScalar::one(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            VectorField<ExactScalar> ej = frame_field(surf, j, zero, one, true);
            VectorField<ExactScalar> out = connect_left(surf.frame[i], ej, c);
            for (int l = 0; l < 2; ++l) CHECK(out.comp[l] == c.mixed.at(i, j, l));
            VectorField<ExactScalar> ejr = frame_field(surf, j, zero, one, false);
            VectorField<ExactScalar> outr = connect_right(surf.frame[i], ejr, c);
            for (int l = 0; l < 2; ++l) CHECK(outr.comp[l] == c.mixed_tilde.at(i, j, l));
        }

    // Leibniz case: Z = f * d_1 with even f
    ExactScalar f = add(ExactScalar::coordinate(1, 2), ExactScalar::one(2));
    VectorField<ExactScalar> Z{true, {f, zero}};
    VectorField<ExactScalar> out = connect_left(surf.frame[0], Z, c);
    for (int l = 0; l < 2; ++l) {
        ExactScalar expect = star(f, c.mixed.at(0, 0, l));
        if (l == 0) expect = add(expect, derive(surf.frame[0], f));
        CHECK(out.comp[l] == expect);
    }
}

TEST_CASE("flat case of odd-direction connections, P = 2") {
    Metric<ExactScalar> m = flat_metric(2, 2);
    Christoffel<ExactScalar> c = christoffel(m);
    const Surface& surf = m.surf;
    ExactScalar zero = ExactScalar::zero(2), one = ExactScalar::one(2);
    // Z = xi1 * d_t1, I = xi_1 direction: nabla reduces to the derivative
    VectorField<ExactScalar> Z{true, {ExactScalar::grassmann(1, 2), zero, zero, zero}};
    VectorField<ExactScalar> out = connect_left(FrameIndex::odd(1), Z, c);
    CHECK(out.comp[0] == one);
    // W = d_t1 * xi1 on the right: sign (-1)^{|d_1||d_xi|} = +1
    VectorField<ExactScalar> W{false, {ExactScalar::grassmann(1, 2), zero, zero, zero}};
    VectorField<ExactScalar> outr = connect_right(FrameIndex::odd(1), W, c);
    CHECK(outr.comp[0] == one);
    // and for an odd frame slot the sign flips
    VectorField<ExactScalar> W2{false, {zero, zero, ExactScalar::grassmann(1, 2), zero}};
    VectorField<ExactScalar> outr2 = connect_right(FrameIndex::odd(1), W2, c);
    CHECK(outr2.comp[2] == neg(one));
}

TEST_CASE("randomized symmetric metrics satisfy every applicable identity") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (int P : {0, 2}) {
            RandomMetricOptions opt;
            opt.P = P;
            opt.N = 2;
            opt.seed = seed;
            opt.symmetric = true;
            Mat<ExactScalar> g = random_exact_metric(opt);
            Metric<ExactScalar> m = make_metric(Surface::make(P, opt.N), kEven, g);
            CHECK(m.graded_symmetric);
            CheckReport rep = check_identities(m);
            for (const auto& r : rep.identities) {
                INFO("identity ", r.identity, " seed ", seed, " P ", P);
                CHECK(r.applicable);
                CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("asymmetric P=1 metrics: ungated identities hold, gated ones are n/a") {
    RandomMetricOptions opt;
    opt.P = 1;
    opt.N = 2;
    opt.seed = 5;
    Mat<ExactScalar> g = random_exact_metric(opt);
    Metric<ExactScalar> m = make_metric(Surface::make(1, opt.N), kEven, g);
    CHECK(!m.graded_symmetric);
    CheckReport rep = check_identities(m);
    int applicable = 0, na = 0;
    for (const auto& r : rep.identities) {
        if (r.applicable) {
            INFO("identity ", r.identity);
            CHECK(r.pass);
            ++applicable;
        } else {
            ++na;
        }
    }
    CHECK(applicable >= 4);
    CHECK(na >= 4);
}

TEST_CASE("metric validation rejects parity violations and singular bodies") {
    Surface surf = Surface::make(1, 2);
    Mat<ExactScalar> g = make_mat(3, ExactScalar::zero(2));
    g[0][0] = ExactScalar::one(2);
    g[1][1] = ExactScalar::one(2);
    g[2][2] = ExactScalar::grassmann(1, 2);  // odd entry where even is required
    CHECK_THROWS_AS(make_metric(surf, kEven, g), ValidationError);

    g[2][2] = ExactScalar::zero(2);
    CHECK_THROWS_AS(make_metric(surf, kEven, g), NotInvertibleError);
}

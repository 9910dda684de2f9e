#include "starsurf/random_metric.hpp"

#include <random>
#include <sstream>

namespace starsurf {

namespace {

struct Draw {
    std::mt19937_64 rng;
    explicit Draw(std::uint64_t seed) : rng(seed ^ 0x9e3779b97f4a7c15ull) {}
    // platform-independent draws
    int upto(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
    long coeff() { return static_cast<long>(upto(5)) - 2; }  // -2..2
    long nonzero_coeff() {
        long c = coeff();
        return c == 0 ? 1 : c;
    }

    // small polynomial, degree <= 1 per variable
    RationalFunc small_poly(bool allow_zero = true) {
        Poly p;
        int terms = upto(3);
        for (int t = 0; t < terms; ++t)
            p.add_term({upto(2), upto(2)}, coeff());
        if (p.is_zero() && !allow_zero) p.add_term({upto(2), upto(2)}, nonzero_coeff());
        return RationalFunc(std::move(p));
    }
};

} // namespace

Mat<ExactScalar> random_exact_metric(const RandomMetricOptions& opt) {
    Draw d(opt.seed);
    const int P = opt.P;
    const int N = opt.N;
    const int D = 2 + P;
    const bool symmetric = opt.symmetric && P != 1;
    Mat<ExactScalar> g = make_mat(D, ExactScalar::zero(N));

    auto even_entry = [&](long body) {
        ExactScalar e(N);
        Poly p = Poly::constant(body);
        int terms = d.upto(3);
        for (int t = 0; t < terms; ++t) p.add_term({d.upto(2), d.upto(2)}, d.coeff());
        e.add_term(0, 0, RationalFunc(std::move(p)));
        if (opt.hbar_terms && N >= 1 && d.upto(2) == 0)
            e.add_term(1, 0, d.small_poly());
        if (P >= 2 && d.upto(2) == 0)
            e.add_term(0, 0b11, d.small_poly());
        return e;
    };
    auto odd_entry = [&]() {
        ExactScalar e(N);
        int alpha = P >= 2 ? d.upto(P) : 0;
        e.add_term(0, GrassMask{1} << alpha, d.small_poly());
        if (opt.hbar_terms && N >= 1 && d.upto(3) == 0)
            e.add_term(1, GrassMask{1} << (P >= 2 ? d.upto(P) : 0), d.small_poly());
        return e;
    };

    // even-even block with invertible constant part
    g[0][0] = even_entry(1 + d.upto(3));
    g[1][1] = even_entry(1 + d.upto(3));
    if (symmetric) {
        ExactScalar off(N);
        if (d.upto(2) == 0) off.add_term(0, 0, d.small_poly());
        g[0][1] = off;
        g[1][0] = off;
    } else {
        if (d.upto(2) == 0) g[1][0] = ExactScalar::one(N);
    }

    if (P == 1) {
        // asymmetric: odd-odd corner needs a body, which graded
        // symmetry would forbid
        g[2][2] = ExactScalar::constant(1 + d.upto(2), N);
        g[0][2] = odd_entry();
        if (d.upto(2) == 0) g[2][0] = odd_entry();
    } else if (P == 2) {
        if (symmetric) {
            for (int a = 0; a < 2; ++a)
                for (int alpha = 2; alpha < 4; ++alpha) {
                    if (d.upto(2) != 0) continue;
                    ExactScalar w = odd_entry();
                    g[a][alpha] = w;
                    g[alpha][a] = w;
                }
            ExactScalar s(N);
            s.add_term(0, 0, RationalFunc::constant(d.nonzero_coeff()));
            int terms = d.upto(2);
            for (int t = 0; t < terms; ++t) s.add_term(0, 0, d.small_poly());
            if (d.upto(2) == 0) s.add_term(0, 0b11, d.small_poly());
            g[2][3] = s;
            g[3][2] = neg(s);
        } else {
            g[2][2] = ExactScalar::constant(1, N);
            g[3][3] = ExactScalar::constant(1 + d.upto(2), N);
            g[2][3] = ExactScalar::zero(N);
            g[3][2] = ExactScalar::constant(d.coeff(), N);
            g[0][2] = odd_entry();
            g[1][3] = odd_entry();
        }
    }
    return g;
}

std::string random_metric_source(const RandomMetricOptions& opt) {
    Mat<ExactScalar> g = random_exact_metric(opt);
    const int D = 2 + opt.P;
    std::ostringstream os;
    os << "# randomized exact metric (seed " << opt.seed << ", P = " << opt.P
       << (opt.symmetric && opt.P != 1 ? ", graded-symmetric" : ", asymmetric") << ")\n";
    os << "[surface]\n";
    os << "even = \"t1 t2\"\n";
    os << "odd = \"";
    for (int a = 1; a <= opt.P; ++a) os << (a > 1 ? " " : "") << "xi" << a;
    os << "\"\n";
    os << "order = \"" << opt.N << "\"\n";
    os << "backend = \"exact\"\n";
    os << "metric_degree = \"even\"\n\n";
    os << "[metric]\n";
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            if (g[i][j].is_zero()) continue;
            os << "g" << i + 1 << j + 1 << " = \"" << g[i][j].str() << "\"\n";
        }
    return os.str();
}

} // namespace starsurf

#include "starsurf/geometry.hpp"

namespace starsurf {

// ------------------------------------------------- exact body inverse

std::optional<Mat<ExactScalar>> body_inverse(const Surface& surf, const Mat<ExactScalar>& g) {
    const int D = surf.D();
    Mat<RationalFunc> a(D, std::vector<RationalFunc>(D));
    Mat<RationalFunc> x(D, std::vector<RationalFunc>(D));
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < D; ++j) a[i][j] = g[i][j].body();
        x[i][i] = RationalFunc::constant(1);
    }
    // Gauss-Jordan over the rational function field
    for (int col = 0; col < D; ++col) {
        int pivot = -1;
        for (int r = col; r < D; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(x[pivot], x[col]);
        RationalFunc inv = a[col][col].inverse();
        for (int j = 0; j < D; ++j) {
            a[col][j] *= inv;
            x[col][j] *= inv;
        }
        for (int r = 0; r < D; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RationalFunc f = a[r][col];
            for (int j = 0; j < D; ++j) {
                a[r][j] -= f * a[col][j];
                x[r][j] -= f * x[col][j];
            }
        }
    }
    Mat<ExactScalar> out = make_mat(D, ExactScalar::zero(surf.N));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) out[i][j] = ExactScalar::from_rational(x[i][j], surf.N);
    return out;
}

// ---------------------------------------------- symbolic body inverse

namespace {

SymScalar body_part(const SymScalar& s) {
    SymScalar b = zero_like(s);
    for (const auto& [key, c] : s.terms())
        if (key.hpow == 0 && key.mask == 0) b.add_term(key.hpow, key.mask, key.word, c);
    return b;
}

std::optional<SymScalar> try_star_inverse(const SymScalar& s) {
    try {
        return star_inverse(s);
    } catch (const NotInvertibleError&) {
        return std::nullopt;
    }
}

} // namespace

// Star Gauss-Jordan solving g0 * X = I with left row operations; every
// pivot must possess a star-word reciprocal.
std::optional<Mat<SymScalar>> body_inverse(const Surface& surf, const Mat<SymScalar>& g) {
    const int D = surf.D();
    const SymScalar zero = zero_like(g[0][0]);
    const SymScalar one = one_like(g[0][0]);
    Mat<SymScalar> a = make_mat(D, zero);
    Mat<SymScalar> x = make_mat(D, zero);
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < D; ++j) a[i][j] = body_part(g[i][j]);
        x[i][i] = one;
    }
    for (int col = 0; col < D; ++col) {
        int pivot = -1;
        std::optional<SymScalar> pinv;
        for (int r = col; r < D; ++r) {
            if (a[r][col].is_zero()) continue;
            pinv = try_star_inverse(a[r][col]);
            if (pinv) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(x[pivot], x[col]);
        for (int r = 0; r < D; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            SymScalar f = star(a[r][col], *pinv);
            for (int j = 0; j < D; ++j) {
                a[r][j] = sub(a[r][j], star(f, a[col][j]));
                x[r][j] = sub(x[r][j], star(f, x[col][j]));
            }
        }
        // scale the pivot row last so the elimination above reuses a[col][col]
        for (int j = 0; j < D; ++j) {
            a[col][j] = star(*pinv, a[col][j]);
            x[col][j] = star(*pinv, x[col][j]);
        }
    }
    return x;
}

// ---------------------------------------------------- prop 4 samples

std::vector<ExactScalar> sample_scalars(const Metric<ExactScalar>& m) {
    const Surface& surf = m.surf;
    const int N = surf.N;
    std::vector<ExactScalar> out;
    ExactScalar even = ExactScalar::from_rational(
        RationalFunc(Poly::constant(1) + Poly::coordinate(1) +
                     Poly::coordinate(1) * Poly::coordinate(2)),
        N);
    if (N >= 1) {
        ExactScalar h(N);
        h.add_term(1, 0, RationalFunc::coordinate(2));
        even = add(even, h);
    }
    if (surf.P >= 2) {
        ExactScalar soul(N);
        soul.add_term(0, 0b11, RationalFunc::coordinate(1));
        even = add(even, soul);
    }
    out.push_back(std::move(even));
    if (surf.P >= 1) {
        ExactScalar odd(N);
        odd.add_term(0, 0b1, RationalFunc(Poly::constant(1) + Poly::coordinate(2)));
        out.push_back(std::move(odd));
    }
    return out;
}

std::vector<SymScalar> sample_scalars(const Metric<SymScalar>& m) {
    const Surface& surf = m.surf;
    std::vector<SymScalar> out;
    // an even sample built from the metric's own entries
    SymScalar even = one_like(m.g[0][0]);
    for (int i = 0; i < surf.D(); ++i) {
        auto p = parity_of(m.g[i][i]);
        if (!m.g[i][i].is_zero() && p && !p->odd()) {
            even = add(even, m.g[i][i]);
            break;
        }
    }
    out.push_back(even);
    if (surf.P >= 1)
        out.push_back(star(SymScalar::grassmann(even.table(), 1, surf.N), even));
    return out;
}

} // namespace starsurf

#pragma once

#include "starsurf/errors.hpp"
#include "starsurf/exact_scalar.hpp"
#include "starsurf/report.hpp"
#include "starsurf/symbolic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace starsurf {

// Frame data of one noncommutative super surface: two even directions
// t1, t2 followed by P odd directions xi1..xiP.
struct Surface {
    int P = 0;
    int N = 4;
    std::vector<FrameIndex> frame;

    static Surface make(int P, int N) {
        Surface s;
        s.P = P;
        s.N = N;
        s.frame = {FrameIndex::even(1), FrameIndex::even(2)};
        for (int a = 1; a <= P; ++a) s.frame.push_back(FrameIndex::odd(a));
        return s;
    }
    int D() const { return 2 + P; }
    Parity par(int i) const { return frame[i].parity(); }
    int pv(int i) const { return frame[i].parity().v; }
};

template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
Mat<S> make_mat(int D, const S& fill) {
    return Mat<S>(D, std::vector<S>(D, fill));
}

template <class S>
class Table3 {
public:
    Table3(int D, const S& fill) : D_(D), v_(D * D * D, fill) {}
    S& at(int i, int j, int k) { return v_[(i * D_ + j) * D_ + k]; }
    const S& at(int i, int j, int k) const { return v_[(i * D_ + j) * D_ + k]; }

private:
    int D_;
    std::vector<S> v_;
};

template <class S>
class Table4 {
public:
    Table4(int D, const S& fill) : D_(D), v_(D * D * D * D, fill) {}
    S& at(int i, int j, int k, int l) { return v_[((i * D_ + j) * D_ + k) * D_ + l]; }
    const S& at(int i, int j, int k, int l) const {
        return v_[((i * D_ + j) * D_ + k) * D_ + l];
    }

private:
    int D_;
    std::vector<S> v_;
};

template <class S>
class Table5 {
public:
    Table5(int D, const S& fill) : D_(D), v_(D * D * D * D * D, fill) {}
    S& at(int p, int i, int j, int k, int l) {
        return v_[(((p * D_ + i) * D_ + j) * D_ + k) * D_ + l];
    }
    const S& at(int p, int i, int j, int k, int l) const {
        return v_[(((p * D_ + i) * D_ + j) * D_ + k) * D_ + l];
    }

private:
    int D_;
    std::vector<S> v_;
};

template <class S>
struct Metric {
    Surface surf;
    Parity degree;
    Mat<S> g;
    Mat<S> ginv;
    bool graded_symmetric = false;
};

// left-module fields Z = Z^I d_I carry coefficients on the left,
// right-module fields Z~ = d_I Z~^I on the right
template <class S>
struct VectorField {
    bool left = true;
    std::vector<S> comp;
};

template <class S>
struct Christoffel {
    Surface surf;
    Table3<S> low;          // Gamma_{IJK}
    Table3<S> mixed;        // Gamma_{IJ}^L
    Table3<S> low_tilde;    // tilde Gamma_{IJL}
    Table3<S> mixed_tilde;  // tilde Gamma_{IJ}^L
};

template <class S>
struct Curvature {
    Surface surf;
    Table4<S> up;        // R^L_{IJK}, stored [i][j][k][l]
    Table4<S> up_tilde;  // tilde R^L_{IJK}
    Table4<S> low;       // R_{IJKL}
    Table4<S> low_tilde;
    bool lowered = false;
};

// body matrix inversion, the backend-specific step of invert_metric
std::optional<Mat<ExactScalar>> body_inverse(const Surface& surf, const Mat<ExactScalar>& g);
std::optional<Mat<SymScalar>> body_inverse(const Surface& surf, const Mat<SymScalar>& g);

template <class S>
Mat<S> star_mat_mul(const Mat<S>& a, const Mat<S>& b) {
    int D = static_cast<int>(a.size());
    Mat<S> r = make_mat(D, zero_like(a[0][0]));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            S acc = zero_like(a[0][0]);
            for (int k = 0; k < D; ++k) {
                if (is_zero(a[i][k]) || is_zero(b[k][j])) continue;
                acc = add(acc, star(a[i][k], b[k][j]));
            }
            r[i][j] = std::move(acc);
        }
    return r;
}

template <class S>
bool mat_is_zero(const Mat<S>& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!is_zero(x)) return false;
    return true;
}

// Right inverse g_{IJ} * g^{JK} = delta_I^K: invert the body matrix,
// then absorb the nilpotent remainder with a Neumann series.
template <class S>
Mat<S> invert_metric_entries(const Surface& surf, const Mat<S>& g) {
    auto g0 = body_inverse(surf, g);
    if (!g0) throw NotInvertibleError("metric not invertible: singular body");
    const S zero = zero_like(g[0][0]);
    const S one = one_like(g[0][0]);
    int D = surf.D();

    Mat<S> E = star_mat_mul(g, *g0);
    for (int i = 0; i < D; ++i) E[i][i] = sub(E[i][i], one);
    if (mat_is_zero(E)) return *g0;

    Mat<S> series = make_mat(D, zero);
    for (int i = 0; i < D; ++i) series[i][i] = one;
    Mat<S> power = series;
    int cap = surf.N + surf.P + 2;
    for (int k = 1; k <= cap; ++k) {
        power = star_mat_mul(power, E);
        for (auto& row : power)
            for (auto& x : row) x = neg(x);
        if (mat_is_zero(power)) break;
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) series[i][j] = add(series[i][j], power[i][j]);
    }
    return star_mat_mul(*g0, series);
}

template <class S>
bool is_graded_symmetric(const Surface& surf, const Mat<S>& g) {
    int D = surf.D();
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            S expect = scalar_mul(koszul(surf.par(i), surf.par(j)), g[j][i]);
            if (!(g[i][j] == expect)) return false;
        }
    return true;
}

// Validates the parity law |g_IJ| = |g| + |I| + |J| and fills the
// right inverse.
template <class S>
Metric<S> make_metric(Surface surf, Parity degree, Mat<S> entries) {
    int D = surf.D();
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            if (is_zero(entries[i][j])) continue;
            auto p = parity_of(entries[i][j]);
            Parity expect = degree + surf.par(i) + surf.par(j);
            if (!p)
                throw ValidationError("metric entry g" + std::to_string(i + 1) +
                                      std::to_string(j + 1) + " is not homogeneous");
            if (!(*p == expect))
                throw ValidationError("metric entry g" + std::to_string(i + 1) +
                                      std::to_string(j + 1) + " must have parity " +
                                      (expect.odd() ? "odd" : "even") + ", got " +
                                      (p->odd() ? "odd" : "even"));
        }
    Metric<S> m{std::move(surf), degree, std::move(entries), {}, false};
    m.graded_symmetric = is_graded_symmetric(m.surf, m.g);
    m.ginv = invert_metric_entries(m.surf, m.g);
    return m;
}

// <Z, W>_g = Z^I * g_IJ * W^J
template <class S>
S pairing(const VectorField<S>& Z, const VectorField<S>& W, const Metric<S>& m) {
    int D = m.surf.D();
    S acc = zero_like(m.g[0][0]);
    for (int i = 0; i < D; ++i) {
        if (is_zero(Z.comp[i])) continue;
        for (int j = 0; j < D; ++j) {
            if (is_zero(m.g[i][j]) || is_zero(W.comp[j])) continue;
            acc = add(acc, star(star(Z.comp[i], m.g[i][j]), W.comp[j]));
        }
    }
    return acc;
}

// Gamma_{IJK} = 1/2 (d_I g_JK + (-1)^{|I||J|} d_J g_IK
//                    - (-1)^{|K|(|I|+|J|)} d_K g_IJ)
// Gamma_{IJ}^L = Gamma_{IJK} * g^{KL}
// tilde Gamma_{IJL} = (-1)^{|L|(|I|+|J|)} Gamma_{IJL}
// tilde Gamma_{IJ}^L = g^{LM} * tilde Gamma_{IJM}
template <class S>
Christoffel<S> christoffel(const Metric<S>& m) {
    const Surface& surf = m.surf;
    int D = surf.D();
    const S zero = zero_like(m.g[0][0]);
    Christoffel<S> c{surf, Table3<S>(D, zero), Table3<S>(D, zero), Table3<S>(D, zero),
                     Table3<S>(D, zero)};
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int k = 0; k < D; ++k) {
                S t = derive(surf.frame[i], m.g[j][k]);
                t = add(t, scalar_mul(koszul(surf.par(i), surf.par(j)),
                                      derive(surf.frame[j], m.g[i][k])));
                t = sub(t, scalar_mul(sign_pow(surf.pv(k) * (surf.pv(i) + surf.pv(j))),
                                      derive(surf.frame[k], m.g[i][j])));
                c.low.at(i, j, k) = scalar_mul(Rat(1, 2), t);
                c.low_tilde.at(i, j, k) =
                    scalar_mul(sign_pow(surf.pv(k) * (surf.pv(i) + surf.pv(j))),
                               c.low.at(i, j, k));
            }
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int l = 0; l < D; ++l) {
                S acc = zero;
                S acc_t = zero;
                for (int k = 0; k < D; ++k) {
                    if (!is_zero(c.low.at(i, j, k)) && !is_zero(m.ginv[k][l]))
                        acc = add(acc, star(c.low.at(i, j, k), m.ginv[k][l]));
                    if (!is_zero(m.ginv[l][k]) && !is_zero(c.low_tilde.at(i, j, k)))
                        acc_t = add(acc_t, star(m.ginv[l][k], c.low_tilde.at(i, j, k)));
                }
                c.mixed.at(i, j, l) = std::move(acc);
                c.mixed_tilde.at(i, j, l) = std::move(acc_t);
            }
    return c;
}

// nabla_{d_I}(Z^J d_J) = (d_I Z^J) d_J + (-1)^{|Z^J||I|} Z^J * Gamma_{IJ}^L d_L
template <class S>
VectorField<S> connect_left(FrameIndex I, const VectorField<S>& Z, const Christoffel<S>& c) {
    const Surface& surf = c.surf;
    int D = surf.D();
    const S zero = zero_like(Z.comp[0]);
    VectorField<S> out{true, std::vector<S>(D, zero)};
    for (int l = 0; l < D; ++l) out.comp[l] = derive(I, Z.comp[l]);
    for (int j = 0; j < D; ++j) {
        if (is_zero(Z.comp[j])) continue;
        auto p = parity_of(Z.comp[j]);
        if (!p)
            throw ValidationError("vector field component " + std::to_string(j + 1) +
                                  " is not homogeneous");
        int sgn = koszul(*p, I.parity());
        for (int l = 0; l < D; ++l) {
            const S& gamma = c.mixed.at(I.position(), j, l);
            if (is_zero(gamma)) continue;
            out.comp[l] = add(out.comp[l], scalar_mul(sgn, star(Z.comp[j], gamma)));
        }
    }
    return out;
}

// tilde nabla_{d_I}(d_J W^J) = d_L (tilde Gamma_{IJ}^L * W^J)
//                            + (-1)^{|J||I|} d_J (d_I W^J)
template <class S>
VectorField<S> connect_right(FrameIndex I, const VectorField<S>& W, const Christoffel<S>& c) {
    const Surface& surf = c.surf;
    int D = surf.D();
    const S zero = zero_like(W.comp[0]);
    VectorField<S> out{false, std::vector<S>(D, zero)};
    for (int l = 0; l < D; ++l)
        out.comp[l] = scalar_mul(koszul(surf.par(l), I.parity()), derive(I, W.comp[l]));
    for (int j = 0; j < D; ++j) {
        if (is_zero(W.comp[j])) continue;
        for (int l = 0; l < D; ++l) {
            const S& gamma = c.mixed_tilde.at(I.position(), j, l);
            if (is_zero(gamma)) continue;
            out.comp[l] = add(out.comp[l], star(gamma, W.comp[j]));
        }
    }
    return out;
}

// T(d_I, d_J)^L = Gamma_{IJ}^L - (-1)^{|I||J|} Gamma_{JI}^L
template <class S>
Table3<S> torsion(const Christoffel<S>& c) {
    const Surface& surf = c.surf;
    int D = surf.D();
    Table3<S> t(D, zero_like(c.low.at(0, 0, 0)));
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int l = 0; l < D; ++l)
                t.at(i, j, l) = sub(c.mixed.at(i, j, l),
                                    scalar_mul(koszul(surf.par(i), surf.par(j)),
                                               c.mixed.at(j, i, l)));
    return t;
}

template <class S>
VectorField<S> frame_field(const Surface& surf, int k, const S& zero, const S& one, bool left) {
    VectorField<S> f{left, std::vector<S>(surf.D(), zero)};
    f.comp[k] = one;
    return f;
}

// [nabla_I, nabla_J] Z for the left module
template <class S>
VectorField<S> commutator_left(int i, int j, const VectorField<S>& Z, const Christoffel<S>& c) {
    const Surface& surf = c.surf;
    VectorField<S> a = connect_left(surf.frame[i], connect_left(surf.frame[j], Z, c), c);
    VectorField<S> b = connect_left(surf.frame[j], connect_left(surf.frame[i], Z, c), c);
    int sgn = koszul(surf.par(i), surf.par(j));
    for (int l = 0; l < surf.D(); ++l) a.comp[l] = sub(a.comp[l], scalar_mul(sgn, b.comp[l]));
    return a;
}

template <class S>
VectorField<S> commutator_right(int i, int j, const VectorField<S>& W, const Christoffel<S>& c) {
    const Surface& surf = c.surf;
    VectorField<S> a = connect_right(surf.frame[i], connect_right(surf.frame[j], W, c), c);
    VectorField<S> b = connect_right(surf.frame[j], connect_right(surf.frame[i], W, c), c);
    int sgn = koszul(surf.par(i), surf.par(j));
    for (int l = 0; l < surf.D(); ++l) a.comp[l] = sub(a.comp[l], scalar_mul(sgn, b.comp[l]));
    return a;
}

// R^L_{IJK} extracted from [nabla_I, nabla_J] d_K = R^L_{IJK} * d_L and
// its right-module counterpart [tilde nabla_I, tilde nabla_J] d_K = d_L * tilde R^L_{IJK}
template <class S>
Curvature<S> curvature_commutator(const Metric<S>& m, const Christoffel<S>& c) {
    const Surface& surf = m.surf;
    int D = surf.D();
    const S zero = zero_like(m.g[0][0]);
    const S one = one_like(m.g[0][0]);
    Curvature<S> r{surf, Table4<S>(D, zero), Table4<S>(D, zero), Table4<S>(D, zero),
                   Table4<S>(D, zero), false};
    for (int k = 0; k < D; ++k) {
        VectorField<S> ek_l = frame_field(surf, k, zero, one, true);
        VectorField<S> ek_r = frame_field(surf, k, zero, one, false);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) {
                VectorField<S> left = commutator_left(i, j, ek_l, c);
                VectorField<S> right = commutator_right(i, j, ek_r, c);
                for (int l = 0; l < D; ++l) {
                    r.up.at(i, j, k, l) = std::move(left.comp[l]);
                    r.up_tilde.at(i, j, k, l) = std::move(right.comp[l]);
                }
            }
    }
    return r;
}

// closed formulas for the same tensors:
// R^L_{IJK} = d_I Gamma_{JK}^L - (-1)^{|I||J|} d_J Gamma_{IK}^L
//   + (-1)^{|I|(|J|+|K|+|M|)} Gamma_{JK}^M * Gamma_{IM}^L
//   - (-1)^{|J|(|K|+|M|)}     Gamma_{IK}^M * Gamma_{JM}^L
// tilde R^L_{IJK} = tilde Gamma_{IM}^L * tilde Gamma_{JK}^M
//   - (-1)^{|I||J|} tilde Gamma_{JM}^L * tilde Gamma_{IK}^M
//   + (-1)^{|I||L|} d_I tilde Gamma_{JK}^L
//   - (-1)^{|J|(|I|+|L|)} d_J tilde Gamma_{IK}^L
template <class S>
Curvature<S> curvature_closed_form(const Metric<S>& m, const Christoffel<S>& c) {
    const Surface& surf = m.surf;
    int D = surf.D();
    const S zero = zero_like(m.g[0][0]);
    Curvature<S> r{surf, Table4<S>(D, zero), Table4<S>(D, zero), Table4<S>(D, zero),
                   Table4<S>(D, zero), false};
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int k = 0; k < D; ++k)
                for (int l = 0; l < D; ++l) {
                    S acc = derive(surf.frame[i], c.mixed.at(j, k, l));
                    acc = sub(acc, scalar_mul(koszul(surf.par(i), surf.par(j)),
                                              derive(surf.frame[j], c.mixed.at(i, k, l))));
                    for (int mm = 0; mm < D; ++mm) {
                        if (!is_zero(c.mixed.at(j, k, mm)) && !is_zero(c.mixed.at(i, mm, l))) {
                            int s1 = sign_pow(surf.pv(i) *
                                              (surf.pv(j) + surf.pv(k) + surf.pv(mm)));
                            acc = add(acc, scalar_mul(s1, star(c.mixed.at(j, k, mm),
                                                               c.mixed.at(i, mm, l))));
                        }
                        if (!is_zero(c.mixed.at(i, k, mm)) && !is_zero(c.mixed.at(j, mm, l))) {
                            int s2 = sign_pow(surf.pv(j) * (surf.pv(k) + surf.pv(mm)));
                            acc = sub(acc, scalar_mul(s2, star(c.mixed.at(i, k, mm),
                                                               c.mixed.at(j, mm, l))));
                        }
                    }
                    r.up.at(i, j, k, l) = std::move(acc);

                    S acct = zero;
                    for (int mm = 0; mm < D; ++mm) {
                        if (!is_zero(c.mixed_tilde.at(i, mm, l)) &&
                            !is_zero(c.mixed_tilde.at(j, k, mm)))
                            acct = add(acct, star(c.mixed_tilde.at(i, mm, l),
                                                  c.mixed_tilde.at(j, k, mm)));
                        if (!is_zero(c.mixed_tilde.at(j, mm, l)) &&
                            !is_zero(c.mixed_tilde.at(i, k, mm)))
                            acct = sub(acct,
                                       scalar_mul(koszul(surf.par(i), surf.par(j)),
                                                  star(c.mixed_tilde.at(j, mm, l),
                                                       c.mixed_tilde.at(i, k, mm))));
                    }
                    acct = add(acct, scalar_mul(koszul(surf.par(i), surf.par(l)),
                                                derive(surf.frame[i],
                                                       c.mixed_tilde.at(j, k, l))));
                    acct = sub(acct,
                               scalar_mul(sign_pow(surf.pv(j) * (surf.pv(i) + surf.pv(l))),
                                          derive(surf.frame[j], c.mixed_tilde.at(i, k, l))));
                    r.up_tilde.at(i, j, k, l) = std::move(acct);
                }
    return r;
}

// R_{IJKL} = R^M_{IJK} * g_{ML},  tilde R_{IJKL} = g_{LM} * tilde R^M_{IJK}
template <class S>
void lower_curvature(Curvature<S>& r, const Metric<S>& m) {
    const Surface& surf = m.surf;
    int D = surf.D();
    const S zero = zero_like(m.g[0][0]);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int k = 0; k < D; ++k)
                for (int l = 0; l < D; ++l) {
                    S acc = zero;
                    S acct = zero;
                    for (int mm = 0; mm < D; ++mm) {
                        if (!is_zero(r.up.at(i, j, k, mm)) && !is_zero(m.g[mm][l]))
                            acc = add(acc, star(r.up.at(i, j, k, mm), m.g[mm][l]));
                        if (!is_zero(m.g[l][mm]) && !is_zero(r.up_tilde.at(i, j, k, mm)))
                            acct = add(acct, star(m.g[l][mm], r.up_tilde.at(i, j, k, mm)));
                    }
                    r.low.at(i, j, k, l) = std::move(acc);
                    r.low_tilde.at(i, j, k, l) = std::move(acct);
                }
    r.lowered = true;
}

// R^L_{IJK;P} = d_P R^L_{IJK}
//   + (-1)^{|P|(|I|+|J|+|K|+|S|)} R^S_{IJK} * Gamma_{PS}^L
//   - Gamma_{PI}^S * R^L_{SJK}
//   - (-1)^{|I|(|S|+|J|)} Gamma_{PJ}^S * R^L_{ISK}
//   - (-1)^{(|I|+|J|)(|K|+|S|)} Gamma_{PK}^S * R^L_{IJS}
// stored as [p][i][j][k][l]
template <class S>
Table5<S> covariant_derivative_curvature(const Curvature<S>& r, const Christoffel<S>& c) {
    const Surface& surf = c.surf;
    int D = surf.D();
    Table5<S> out(D, zero_like(c.low.at(0, 0, 0)));
    for (int p = 0; p < D; ++p)
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j)
                for (int k = 0; k < D; ++k)
                    for (int l = 0; l < D; ++l) {
                        S acc = derive(surf.frame[p], r.up.at(i, j, k, l));
                        for (int s = 0; s < D; ++s) {
                            if (!is_zero(r.up.at(i, j, k, s)) && !is_zero(c.mixed.at(p, s, l))) {
                                int s1 = sign_pow(surf.pv(p) * (surf.pv(i) + surf.pv(j) +
                                                                surf.pv(k) + surf.pv(s)));
                                acc = add(acc, scalar_mul(s1, star(r.up.at(i, j, k, s),
                                                                   c.mixed.at(p, s, l))));
                            }
                            if (!is_zero(c.mixed.at(p, i, s)) && !is_zero(r.up.at(s, j, k, l)))
                                acc = sub(acc, star(c.mixed.at(p, i, s), r.up.at(s, j, k, l)));
                            if (!is_zero(c.mixed.at(p, j, s)) && !is_zero(r.up.at(i, s, k, l))) {
                                int s3 = sign_pow(surf.pv(i) * (surf.pv(s) + surf.pv(j)));
                                acc = sub(acc, scalar_mul(s3, star(c.mixed.at(p, j, s),
                                                                   r.up.at(i, s, k, l))));
                            }
                            if (!is_zero(c.mixed.at(p, k, s)) && !is_zero(r.up.at(i, j, s, l))) {
                                int s4 = sign_pow((surf.pv(i) + surf.pv(j)) *
                                                  (surf.pv(k) + surf.pv(s)));
                                acc = sub(acc, scalar_mul(s4, star(c.mixed.at(p, k, s),
                                                                   r.up.at(i, j, s, l))));
                            }
                        }
                        out.at(p, i, j, k, l) = std::move(acc);
                    }
    return out;
}

// Ric(d_J, d_K) = sum_I (-1)^{|I|(|I|+|J|+|K|)}
//                 1/2 [R^I_{IJK} + (-1)^{|J||K|} R^I_{IKJ}]
// (the dangling upper index of the printed formula is contracted with I)
template <class S>
Mat<S> ricci(const Curvature<S>& r) {
    const Surface& surf = r.surf;
    int D = surf.D();
    const S zero = zero_like(r.up.at(0, 0, 0, 0));
    Mat<S> ric = make_mat(D, zero);
    for (int j = 0; j < D; ++j)
        for (int k = 0; k < D; ++k) {
            S acc = zero;
            for (int i = 0; i < D; ++i) {
                S term = add(r.up.at(i, j, k, i),
                             scalar_mul(koszul(surf.par(j), surf.par(k)), r.up.at(i, k, j, i)));
                if (is_zero(term)) continue;
                int s = sign_pow(surf.pv(i) * (surf.pv(i) + surf.pv(j) + surf.pv(k)));
                acc = add(acc, scalar_mul(Rat(s, 2), term));
            }
            ric[j][k] = std::move(acc);
        }
    return ric;
}

// S = sum_{IJ} (-1)^{(|I|+1)|J|} R_{JI} * g^{IJ}
template <class S>
S scalar_curvature(const Mat<S>& ric, const Metric<S>& m) {
    const Surface& surf = m.surf;
    int D = surf.D();
    S acc = zero_like(m.g[0][0]);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            if (is_zero(ric[j][i]) || is_zero(m.ginv[i][j])) continue;
            int s = sign_pow((surf.pv(i) + 1) * surf.pv(j));
            acc = add(acc, scalar_mul(s, star(ric[j][i], m.ginv[i][j])));
        }
    return acc;
}

// per-backend homogeneous sample scalars for the module-homomorphism check
std::vector<ExactScalar> sample_scalars(const Metric<ExactScalar>& m);
std::vector<SymScalar> sample_scalars(const Metric<SymScalar>& m);

template <class S>
CheckReport check_identities(const Metric<S>& m);

} // namespace starsurf

#include "starsurf/geometry_checks.hpp"

#pragma once

// check_identities: residual evaluation for every proposition the
// source text proves, hypothesis-gated.  Included from geometry.hpp.

#include <string>
#include <vector>

namespace starsurf {

namespace detail {

template <class S>
bool table3_zero(const Table3<S>& t, int D) {
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            for (int l = 0; l < D; ++l)
                if (!is_zero(t.at(i, j, l))) return false;
    return true;
}

} // namespace detail

template <class S>
CheckReport check_identities(const Metric<S>& m) {
    const Surface& surf = m.surf;
    const int D = surf.D();
    const S zero = zero_like(m.g[0][0]);
    const S one = one_like(m.g[0][0]);
    const bool sym = m.graded_symmetric;
    const bool even = !m.degree.odd();

    CheckReport rep;
    rep.kind = "identity_check";
    rep.order = surf.N;
    rep.odd_dim = surf.P;
    rep.metric_degree = m.degree.odd() ? "odd" : "even";
    rep.graded_symmetric = sym;
    rep.conventions["moyal"] = "f*g = mu exp(hbar(d_t1 x d_t2 - d_t2 x d_t1))(f x g)";
    rep.conventions["ricci"] = "dangling upper index contracted with the summation index";

    Christoffel<S> gamma = christoffel(m);
    Curvature<S> curv = curvature_commutator(m, gamma);

    auto row = [&](const std::string& name, bool applicable, bool pass,
                   const std::string& note = "") {
        rep.identities.push_back(IdentityRow{name, applicable, pass, note});
    };

    // g_{IJ} * g^{JK} = delta_I^K
    {
        bool ok = true;
        for (int i = 0; i < D && ok; ++i)
            for (int k = 0; k < D && ok; ++k) {
                S acc = zero;
                for (int j = 0; j < D; ++j) {
                    if (is_zero(m.g[i][j]) || is_zero(m.ginv[j][k])) continue;
                    acc = add(acc, star(m.g[i][j], m.ginv[j][k]));
                }
                if (i == k) acc = sub(acc, one);
                ok = is_zero(acc);
            }
        row("right_inverse", true, ok);
    }

    // parity law for Gamma_{IJK} and R^L_{IJK}
    {
        bool ok = true;
        for (int i = 0; i < D && ok; ++i)
            for (int j = 0; j < D && ok; ++j)
                for (int k = 0; k < D && ok; ++k) {
                    const S& v = gamma.low.at(i, j, k);
                    if (is_zero(v)) continue;
                    auto p = parity_of(v);
                    Parity expect = m.degree + surf.par(i) + surf.par(j) + surf.par(k);
                    ok = p && *p == expect;
                }
        for (int i = 0; i < D && ok; ++i)
            for (int j = 0; j < D && ok; ++j)
                for (int k = 0; k < D && ok; ++k)
                    for (int l = 0; l < D && ok; ++l) {
                        const S& v = curv.up.at(i, j, k, l);
                        if (is_zero(v)) continue;
                        auto p = parity_of(v);
                        Parity expect = surf.par(i) + surf.par(j) + surf.par(k) + surf.par(l);
                        ok = p && (even ? *p == expect : true);
                    }
        row("parity_law", true, ok);
    }

    // metric compatibility in frame form:
    // Gamma_{IJ}^L * g_{LK} + (-1)^{|I||J|} g_{JL} * tilde Gamma_{IK}^L = d_I g_{JK}
    {
        bool applicable = sym && even;
        bool ok = true;
        if (applicable) {
            for (int i = 0; i < D && ok; ++i)
                for (int j = 0; j < D && ok; ++j)
                    for (int k = 0; k < D && ok; ++k) {
                        S acc = zero;
                        for (int l = 0; l < D; ++l) {
                            if (!is_zero(gamma.mixed.at(i, j, l)) && !is_zero(m.g[l][k]))
                                acc = add(acc, star(gamma.mixed.at(i, j, l), m.g[l][k]));
                            if (!is_zero(m.g[j][l]) && !is_zero(gamma.mixed_tilde.at(i, k, l)))
                                acc = add(acc,
                                          scalar_mul(koszul(surf.par(i), surf.par(j)),
                                                     star(m.g[j][l],
                                                          gamma.mixed_tilde.at(i, k, l))));
                        }
                        acc = sub(acc, derive(surf.frame[i], m.g[j][k]));
                        ok = is_zero(acc);
                    }
        }
        row("metric_compatibility", applicable, applicable && ok,
            applicable ? "" : "requires |g| = 0 and a graded-symmetric metric");
    }

    // torsion
    {
        bool applicable = sym;
        bool ok = applicable && detail::table3_zero(torsion(gamma), D);
        row("torsion_free", applicable, ok,
            applicable ? "" : "requires a graded-symmetric metric");
    }

    // [nabla_I, nabla_J] is a module homomorphism (and its right analogue)
    {
        bool ok = true;
        std::vector<S> samples = sample_scalars(m);
        for (const S& f : samples) {
            if (is_zero(f)) continue;
            auto pf = parity_of(f);
            if (!pf) continue;
            for (int k = 0; k < D && ok; ++k) {
                VectorField<S> ek = frame_field(surf, k, zero, one, true);
                VectorField<S> ek_r = frame_field(surf, k, zero, one, false);
                VectorField<S> fZ{true, std::vector<S>(D, zero)};
                VectorField<S> Wf{false, std::vector<S>(D, zero)};
                fZ.comp[k] = f;
                Wf.comp[k] = f;
                for (int i = 0; i < D && ok; ++i)
                    for (int j = 0; j < D && ok; ++j) {
                        VectorField<S> lhs = commutator_left(i, j, fZ, gamma);
                        VectorField<S> base = commutator_left(i, j, ek, gamma);
                        int sgn = sign_pow(pf->v * (surf.pv(i) + surf.pv(j)));
                        for (int l = 0; l < D && ok; ++l) {
                            S rhs = scalar_mul(sgn, star(f, base.comp[l]));
                            ok = is_zero(sub(lhs.comp[l], rhs));
                        }
                        if (!ok) break;
                        VectorField<S> rl = commutator_right(i, j, Wf, gamma);
                        VectorField<S> rbase = commutator_right(i, j, ek_r, gamma);
                        for (int l = 0; l < D && ok; ++l) {
                            S rhs = star(rbase.comp[l], f);
                            ok = is_zero(sub(rl.comp[l], rhs));
                        }
                    }
            }
        }
        row("commutator_module_hom", true, ok);
    }

    // closed formula vs commutator extraction, both tensors
    {
        Curvature<S> closed = curvature_closed_form(m, gamma);
        bool ok = true;
        for (int i = 0; i < D && ok; ++i)
            for (int j = 0; j < D && ok; ++j)
                for (int k = 0; k < D && ok; ++k)
                    for (int l = 0; l < D && ok; ++l)
                        ok = curv.up.at(i, j, k, l) == closed.up.at(i, j, k, l) &&
                             curv.up_tilde.at(i, j, k, l) == closed.up_tilde.at(i, j, k, l);
        row("closed_form_equals_commutator", true, ok);
    }

    // graded antisymmetry in the first two slots
    {
        bool ok = true;
        for (int i = 0; i < D && ok; ++i)
            for (int j = 0; j < D && ok; ++j)
                for (int k = 0; k < D && ok; ++k)
                    for (int l = 0; l < D && ok; ++l) {
                        S rhs = scalar_mul(-koszul(surf.par(i), surf.par(j)),
                                           curv.up.at(j, i, k, l));
                        ok = curv.up.at(i, j, k, l) == rhs;
                    }
        row("antisymmetry_IJ", true, ok);
    }

    // R_{IJKL} = -(-1)^{(|I|+|J|)|K|} tilde R_{IJLK}
    {
        bool applicable = sym && even;
        bool ok = true;
        if (applicable) {
            lower_curvature(curv, m);
            for (int i = 0; i < D && ok; ++i)
                for (int j = 0; j < D && ok; ++j)
                    for (int k = 0; k < D && ok; ++k)
                        for (int l = 0; l < D && ok; ++l) {
                            S rhs = scalar_mul(-sign_pow((surf.pv(i) + surf.pv(j)) * surf.pv(k)),
                                               curv.low_tilde.at(i, j, l, k));
                            ok = curv.low.at(i, j, k, l) == rhs;
                        }
        }
        row("left_right_curvature", applicable, applicable && ok,
            applicable ? "" : "requires |g| = 0 and a graded-symmetric metric");
    }

    // first Bianchi identity
    {
        bool applicable = sym;
        bool ok = true;
        if (applicable) {
            for (int i = 0; i < D && ok; ++i)
                for (int j = 0; j < D && ok; ++j)
                    for (int k = 0; k < D && ok; ++k)
                        for (int l = 0; l < D && ok; ++l) {
                            S acc = scalar_mul(koszul(surf.par(i), surf.par(k)),
                                               curv.up.at(i, j, k, l));
                            acc = add(acc, scalar_mul(koszul(surf.par(i), surf.par(j)),
                                                      curv.up.at(j, k, i, l)));
                            acc = add(acc, scalar_mul(koszul(surf.par(j), surf.par(k)),
                                                      curv.up.at(k, i, j, l)));
                            ok = is_zero(acc);
                        }
        }
        row("bianchi_first", applicable, applicable && ok,
            applicable ? "" : "requires a graded-symmetric metric");
    }

    // second Bianchi identity
    {
        bool applicable = sym && even;
        bool ok = true;
        if (applicable) {
            Table5<S> rp = covariant_derivative_curvature(curv, gamma);
            for (int p = 0; p < D && ok; ++p)
                for (int i = 0; i < D && ok; ++i)
                    for (int j = 0; j < D && ok; ++j)
                        for (int k = 0; k < D && ok; ++k)
                            for (int l = 0; l < D && ok; ++l) {
                                S acc = scalar_mul(koszul(surf.par(p), surf.par(j)),
                                                   rp.at(p, i, j, k, l));
                                acc = add(acc, scalar_mul(koszul(surf.par(i), surf.par(j)),
                                                          rp.at(j, p, i, k, l)));
                                acc = add(acc, scalar_mul(koszul(surf.par(p), surf.par(i)),
                                                          rp.at(i, j, p, k, l)));
                                ok = is_zero(acc);
                            }
        }
        row("bianchi_second", applicable, applicable && ok,
            applicable ? "" : "requires |g| = 0 and a graded-symmetric metric");
    }

    return rep;
}

} // namespace starsurf

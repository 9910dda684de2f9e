#include "starsurf/rational.hpp"

#include "starsurf/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace starsurf {

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(Rat c) {
    Poly p;
    p.add_term({0, 0}, std::move(c));
    return p;
}

Poly Poly::coordinate(int k) {
    Poly p;
    Expo e{0, 0};
    e[k - 1] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(Expo e, Rat c) {
    Poly p;
    p.add_term(e, std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0});
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0} &&
           terms_.begin()->second == 1;
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

int Poly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var - 1]);
    return d;
}

void Poly::add_term(Expo e, Rat c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::mul_monomial(Expo e, const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [te, tc] : terms_)
        r.terms_.emplace(Expo{te[0] + e[0], te[1] + e[1]}, tc * c);
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r;
    int v = var - 1;
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expo d = e;
        d[v] -= 1;
        r.add_term(d, c * e[v]);
    }
    return r;
}

Poly Poly::pow(int n) const {
    Poly r = Poly::constant(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (int v = 0; v < 2; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(v + 1);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << mono;
        }
    }
    return os.str();
}

// ------------------------------------------------------------- gcd
namespace {

// The gcd works over Z with dense coefficient vectors: rational content
// is stripped on entry, the subresultant PRS runs on mpz arithmetic,
// and the result is re-normalized to a monic-lex Q-polynomial.

using ZP1 = std::vector<mpz_class>;               // t1-polynomial
using ZP2 = std::vector<ZP1>;                     // [t2 power][t1 power]

void zp1_trim(ZP1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool zp1_zero(const ZP1& p) { return p.empty(); }

ZP1 zp1_mul(const ZP1& a, const ZP1& b) {
    if (a.empty() || b.empty()) return {};
    ZP1 r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    zp1_trim(r);
    return r;
}

mpz_class zp1_content(const ZP1& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zp1_divexact_int(ZP1& p, const mpz_class& d) {
    if (d == 1) return;
    for (auto& c : p)
        if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// primitive Euclid over Z[t1]
ZP1 zp1_gcd(ZP1 a, ZP1 b) {
    zp1_trim(a);
    zp1_trim(b);
    if (zp1_zero(a)) return b;
    if (zp1_zero(b)) return a;
    zp1_divexact_int(a, zp1_content(a));
    zp1_divexact_int(b, zp1_content(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!zp1_zero(b)) {
        if (b.size() == 1) return {mpz_class(1)};
        // pseudo-remainder of a by b
        ZP1 r = a;
        const mpz_class& lb = b.back();
        while (!zp1_zero(r) && r.size() >= b.size()) {
            mpz_class lr = r.back();
            size_t shift = r.size() - b.size();
            for (auto& c : r) c *= lb;
            for (size_t j = 0; j < b.size(); ++j) r[j + shift] -= lr * b[j];
            zp1_trim(r);
        }
        a = std::move(b);
        if (!zp1_zero(r)) zp1_divexact_int(r, zp1_content(r));
        b = std::move(r);
    }
    return a;
}

ZP1 zp1_divexact(const ZP1& a, const ZP1& b) {
    // exact long division over Z[t1]
    ZP1 r = a;
    ZP1 q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (!zp1_zero(r) && r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) r[j + shift] -= c * b[j];
        zp1_trim(r);
    }
    zp1_trim(q);
    return q;
}

int zp2_deg(const ZP2& p) { return static_cast<int>(p.size()) - 1; }

void zp2_trim(ZP2& p) {
    for (auto& c : p) zp1_trim(c);
    while (!p.empty() && zp1_zero(p.back())) p.pop_back();
}

// content of p in t2: gcd of the t1-coefficients
ZP1 zp2_content(const ZP2& p) {
    ZP1 g;
    for (const auto& c : p) {
        if (zp1_zero(c)) continue;
        g = zp1_gcd(g, c);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

ZP2 zp2_div_zp1(const ZP2& p, const ZP1& d) {
    if (d.size() == 1 && d[0] == 1) return p;
    ZP2 r(p.size());
    for (size_t j = 0; j < p.size(); ++j)
        if (!zp1_zero(p[j])) r[j] = zp1_divexact(p[j], d);
    return r;
}

// integer-primitive image of a Q-polynomial
ZP2 to_zp2(const Poly& p) {
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    ZP2 out(p.degree(2) + 1);
    int d1 = p.degree(1);
    for (auto& row : out) row.assign(d1 + 1, mpz_class(0));
    for (const auto& [e, c] : p.terms()) {
        Rat scaled = c * den_lcm;
        out[e[1]][e[0]] = scaled.get_num();
    }
    zp2_trim(out);
    mpz_class content = 0;
    for (const auto& row : out)
        for (const auto& c : row) {
            if (c == 0) continue;
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
            if (content == 1) goto done;
        }
done:
    if (content > 1)
        for (auto& row : out) zp1_divexact_int(row, content);
    return out;
}

Poly from_zp2(const ZP2& p) {
    Poly out;
    for (size_t j = 0; j < p.size(); ++j)
        for (size_t i = 0; i < p[j].size(); ++i)
            if (p[j][i] != 0)
                out.add_term({static_cast<int>(i), static_cast<int>(j)}, Rat(p[j][i]));
    return out;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    Rat lead = p.leading().second;
    return p.scaled(1 / lead);
}

// pseudo-remainder in t2 normalized to lc(b)^{da-db+1} a mod b
ZP2 zp2_prem(const ZP2& a, const ZP2& b) {
    int db = zp2_deg(b);
    const ZP1& lb = b.back();
    ZP2 r = a;
    int steps = zp2_deg(a) - db + 1;
    while (!r.empty() && zp2_deg(r) >= db) {
        ZP1 lr = r.back();
        int shift = zp2_deg(r) - db;
        for (auto& c : r) c = zp1_mul(c, lb);
        for (int j = 0; j <= db; ++j) {
            ZP1 sub = zp1_mul(lr, b[j]);
            ZP1& dst = r[j + shift];
            if (dst.size() < sub.size()) dst.resize(sub.size(), mpz_class(0));
            for (size_t i = 0; i < sub.size(); ++i) dst[i] -= sub[i];
        }
        zp2_trim(r);
        --steps;
    }
    for (; steps > 0; --steps)
        for (auto& c : r) c = zp1_mul(c, lb);
    return r;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(1);

    ZP2 za = to_zp2(a);
    ZP2 zb = to_zp2(b);

    if (zp2_deg(za) == 0 && zp2_deg(zb) == 0) {
        ZP1 g = zp1_gcd(za[0], zb[0]);
        return monic(from_zp2(ZP2{g}));
    }

    ZP1 ca = zp2_content(za);
    ZP1 cb = zp2_content(zb);
    ZP1 cg = zp1_gcd(ca, cb);

    ZP2 pa = zp2_div_zp1(za, ca);
    ZP2 pb = zp2_div_zp1(zb, cb);
    if (zp2_deg(pa) < zp2_deg(pb)) std::swap(pa, pb);

    // subresultant PRS in t2 over Z[t1]
    ZP1 g{mpz_class(1)}, h{mpz_class(1)};
    while (true) {
        int delta = zp2_deg(pa) - zp2_deg(pb);
        ZP2 r = zp2_prem(pa, pb);
        if (r.empty()) break;
        if (zp2_deg(pb) == 0) {
            pb = ZP2{{mpz_class(1)}};
            break;
        }
        ZP1 divisor = g;
        for (int i = 0; i < delta; ++i) divisor = zp1_mul(divisor, h);
        pa = std::move(pb);
        pb = zp2_div_zp1(r, divisor);
        g = pa.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            ZP1 gd = g;
            for (int i = 1; i < delta; ++i) gd = zp1_mul(gd, g);
            ZP1 hd = h;
            for (int i = 2; i < delta; ++i) hd = zp1_mul(hd, h);
            h = zp1_divexact(gd, hd);
        }
    }
    ZP2 res;
    if (zp2_deg(pb) == 0) {
        res = ZP2{cg};
    } else {
        ZP2 pp = zp2_div_zp1(pb, zp2_content(pb));
        res.assign(pp.size(), {});
        for (size_t j = 0; j < pp.size(); ++j) res[j] = zp1_mul(pp[j], cg);
    }
    return monic(from_zp2(res));
}

std::optional<Poly> poly_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    Poly r = a;
    Poly q;
    const auto& [be, bc] = b.leading();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading();
        if (re[0] < be[0] || re[1] < be[1]) return std::nullopt;
        Poly::Expo e{re[0] - be[0], re[1] - be[1]};
        Rat c = rc / bc;
        q.add_term(e, c);
        r -= b.mul_monomial(e, c);
    }
    return q;
}

// ------------------------------------------------------ RationalFunc

RationalFunc::RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotInvertibleError("division by the zero polynomial");
    normalize();
}

void RationalFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *poly_divide(num_, g);
            den_ = *poly_divide(den_, g);
        }
    }
    Rat lead = den_.leading().second;
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunc(a.num_ + b.num_, a.den_);
    Poly g = poly_gcd(a.den_, b.den_);
    Poly bred = g.is_one() ? b.den_ : *poly_divide(b.den_, g);
    Poly ared = g.is_one() ? a.den_ : *poly_divide(a.den_, g);
    return RationalFunc(a.num_ * bred + b.num_ * ared, a.den_ * bred);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) { return a + (-b); }

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunc();
    if (a.num_.is_constant() && a.den_.is_one()) return b.scaled(a.num_.constant_value());
    if (b.num_.is_constant() && b.den_.is_one()) return a.scaled(b.num_.constant_value());
    // cross-reduce so the product is already in lowest terms
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly n1 = g1.is_one() ? a.num_ : *poly_divide(a.num_, g1);
    Poly d2 = g1.is_one() ? b.den_ : *poly_divide(b.den_, g1);
    Poly n2 = g2.is_one() ? b.num_ : *poly_divide(b.num_, g2);
    Poly d1 = g2.is_one() ? a.den_ : *poly_divide(a.den_, g2);
    RationalFunc r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    Rat lead = r.den_.leading().second;
    if (lead != 1) {
        Rat inv = 1 / lead;
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) { return a * b.inverse(); }

RationalFunc RationalFunc::scaled(const Rat& c) const {
    RationalFunc r;
    if (c == 0) return r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
}

RationalFunc RationalFunc::inverse() const {
    if (is_zero()) throw NotInvertibleError("zero rational function has no inverse");
    return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::derivative(int var) const {
    if (is_polynomial()) return RationalFunc(num_.derivative(var));
    Poly dd = den_.derivative(var);
    if (dd.is_zero()) return RationalFunc(num_.derivative(var), den_);
    // (n/d)' = (n' u - n v)/(d u) with g = gcd(d, d'), u = d/g, v = d'/g;
    // dividing out g first keeps the final reduction small
    Poly g = poly_gcd(den_, dd);
    Poly u = g.is_one() ? den_ : *poly_divide(den_, g);
    Poly v = g.is_one() ? dd : *poly_divide(dd, g);
    Poly n = num_.derivative(var) * u - num_ * v;
    return RationalFunc(std::move(n), den_ * u);
}

RationalFunc RationalFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunc r = RationalFunc::constant(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

std::string RationalFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    bool nsimple = num_.terms().size() <= 1;
    bool dsimple = den_.terms().size() <= 1 && den_.leading().second > 0;
    std::string out = nsimple ? n : "(" + n + ")";
    out += "/";
    out += dsimple ? d : "(" + d + ")";
    return out;
}

} // namespace starsurf

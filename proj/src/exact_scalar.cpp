#include "starsurf/exact_scalar.hpp"

#include "starsurf/errors.hpp"

#include <sstream>
#include <vector>

namespace starsurf {

ExactScalar ExactScalar::constant(Rat c, int order) {
    ExactScalar s(order);
    s.add_term(0, 0, RationalFunc::constant(std::move(c)));
    return s;
}

ExactScalar ExactScalar::from_rational(RationalFunc f, int order) {
    ExactScalar s(order);
    s.add_term(0, 0, std::move(f));
    return s;
}

ExactScalar ExactScalar::coordinate(int k, int order) {
    return from_rational(RationalFunc::coordinate(k), order);
}

ExactScalar ExactScalar::hbar(int order) {
    ExactScalar s(order);
    s.add_term(1, 0, RationalFunc::constant(1));
    return s;
}

ExactScalar ExactScalar::grassmann(int alpha, int order) {
    ExactScalar s(order);
    s.add_term(0, GrassMask{1} << (alpha - 1), RationalFunc::constant(1));
    return s;
}

ExactScalar ExactScalar::term(int hpow, GrassMask mask, RationalFunc f, int order) {
    ExactScalar s(order);
    s.add_term(hpow, mask, f);
    return s;
}

bool ExactScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second.is_one();
}

RationalFunc ExactScalar::body() const {
    auto it = terms_.find(Key{0, 0});
    return it == terms_.end() ? RationalFunc() : it->second;
}

std::optional<Parity> ExactScalar::parity() const {
    std::optional<Parity> p;
    for (const auto& [key, f] : terms_) {
        Parity q = grass_parity(key.mask);
        if (!p) {
            p = q;
        } else if (*p != q) {
            return std::nullopt;
        }
    }
    return p ? p : std::optional<Parity>(kEven);
}

std::map<GrassMask, RationalFunc> ExactScalar::classical_part() const {
    std::map<GrassMask, RationalFunc> out;
    for (const auto& [key, f] : terms_)
        if (key.hpow == 0) out.emplace(key.mask, f);
    return out;
}

void ExactScalar::add_term(int hpow, GrassMask mask, const RationalFunc& f) {
    if (hpow > order_ || f.is_zero()) return;
    Key k{hpow, mask};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

void check_order(const ExactScalar& a, const ExactScalar& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("mismatched truncation orders " + std::to_string(a.order()) +
                                 " and " + std::to_string(b.order()));
}

} // namespace

ExactScalar add(const ExactScalar& a, const ExactScalar& b) {
    check_order(a, b);
    ExactScalar r = a;
    for (const auto& [key, f] : b.terms()) r.add_term(key.hpow, key.mask, f);
    return r;
}

ExactScalar sub(const ExactScalar& a, const ExactScalar& b) { return add(a, neg(b)); }

ExactScalar neg(const ExactScalar& a) {
    ExactScalar r(a.order());
    for (const auto& [key, f] : a.terms()) r.add_term(key.hpow, key.mask, -f);
    return r;
}

ExactScalar scalar_mul(const Rat& c, const ExactScalar& a) {
    ExactScalar r(a.order());
    if (c == 0) return r;
    for (const auto& [key, f] : a.terms()) r.add_term(key.hpow, key.mask, f.scaled(c));
    return r;
}

ExactScalar star(const ExactScalar& a, const ExactScalar& b) {
    check_order(a, b);
    const int N = a.order();
    ExactScalar r(N);
    if (a.is_zero() || b.is_zero()) return r;

    // derivative triangles d1^i d2^j, filled lazily per coefficient
    struct Tower {
        std::vector<std::vector<RationalFunc>> d;  // d[i][j]
        explicit Tower(const RationalFunc& f, int depth) {
            d.assign(depth + 1, {});
            d[0].push_back(f);
            for (int i = 1; i <= depth; ++i) d[i].push_back(d[i - 1][0].derivative(1));
            for (int i = 0; i <= depth; ++i)
                for (int j = 1; i + j <= depth; ++j) d[i].push_back(d[i][j - 1].derivative(2));
        }
        const RationalFunc& at(int i, int j) const { return d[i][j]; }
    };

    std::vector<Rat> factorial(N + 1, 1);
    for (int n = 1; n <= N; ++n) factorial[n] = factorial[n - 1] * n;
    auto binom = [&](int n, int k) -> Rat { return factorial[n] / (factorial[k] * factorial[n - k]); };

    // derivative towers are shared across all term pairs
    std::vector<std::pair<const ExactScalar::Key*, Tower>> ta, tb;
    ta.reserve(a.terms().size());
    tb.reserve(b.terms().size());
    for (const auto& [key, f] : a.terms()) ta.emplace_back(&key, Tower(f, N - key.hpow));
    for (const auto& [key, f] : b.terms()) tb.emplace_back(&key, Tower(f, N - key.hpow));

    for (const auto& [ka, towa] : ta) {
        for (const auto& [kb, towb] : tb) {
            auto merged = grass_merge(ka->mask, kb->mask);
            if (!merged) continue;
            int base = ka->hpow + kb->hpow;
            if (base > N) continue;
            int depth = N - base;
            Rat sgn = merged->second;
            for (int n = 0; n <= depth; ++n) {
                RationalFunc coeff;
                for (int k = 0; k <= n; ++k) {
                    const RationalFunc& da = towa.at(n - k, k);
                    const RationalFunc& db = towb.at(k, n - k);
                    if (da.is_zero() || db.is_zero()) continue;
                    RationalFunc prod = da * db;
                    if (k & 1) prod = -prod;
                    coeff += prod.scaled(binom(n, k));
                }
                if (coeff.is_zero()) continue;
                r.add_term(base + n, merged->first, coeff.scaled(sgn / factorial[n]));
            }
        }
    }
    return r;
}

ExactScalar derive(FrameIndex I, const ExactScalar& a) {
    ExactScalar r(a.order());
    if (!I.is_odd()) {
        for (const auto& [key, f] : a.terms())
            r.add_term(key.hpow, key.mask, f.derivative(I.index()));
    } else {
        for (const auto& [key, f] : a.terms()) {
            auto d = grass_derive(key.mask, I.index());
            if (!d) continue;
            r.add_term(key.hpow, d->first, f.scaled(d->second));
        }
    }
    return r;
}

ExactScalar star_inverse(const ExactScalar& a) {
    RationalFunc b = a.body();
    if (b.is_zero()) throw NotInvertibleError("scalar is not invertible: zero body");
    const int N = a.order();
    ExactScalar x0 = ExactScalar::from_rational(b.inverse(), N);
    // a * x0 = 1 + e with e in the augmentation ideal (hbar degree plus
    // Grassmann degree >= 1), so the Neumann series terminates.
    ExactScalar e = sub(star(a, x0), ExactScalar::one(N));
    ExactScalar series = ExactScalar::one(N);
    ExactScalar power = ExactScalar::one(N);
    int cap = N + 33;
    for (int k = 1; k <= cap && !power.is_zero(); ++k) {
        power = neg(star(power, e));
        series = add(series, power);
    }
    return star(x0, series);
}

std::string ExactScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : terms_) {
        std::string cs = f.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string factors;
        if (key.hpow == 1) factors = "hbar";
        if (key.hpow > 1) factors = "hbar^" + std::to_string(key.hpow);
        for (int g = 0; g < 32; ++g) {
            if (key.mask & (GrassMask{1} << g)) {
                if (!factors.empty()) factors += "*";
                factors += "xi" + std::to_string(g + 1);
            }
        }
        bool trivial = cs == "1";
        if (factors.empty()) {
            os << cs;
        } else if (trivial) {
            os << factors;
        } else {
            bool wrap = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
            os << (wrap ? "(" + cs + ")" : cs) << "*" << factors;
        }
    }
    return os.str();
}

} // namespace starsurf

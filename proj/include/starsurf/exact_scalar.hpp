#pragma once

#include "starsurf/grading.hpp"
#include "starsurf/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace starsurf {

// Element of the deformed graded scalar algebra: an hbar-series
// truncated at a fixed order N whose coefficients are rational
// functions in (t1, t2) indexed by Grassmann monomials.  Values are
// immutable sparse normal forms: zero coefficients are never stored,
// so structural equality is equality.
class ExactScalar {
public:
    struct Key {
        int hpow = 0;
        GrassMask mask = 0;
        auto operator<=>(const Key&) const = default;
    };
    using TermMap = std::map<Key, RationalFunc>;

    explicit ExactScalar(int order) : order_(order) {}

    static ExactScalar zero(int order) { return ExactScalar(order); }
    static ExactScalar one(int order) { return constant(1, order); }
    static ExactScalar constant(Rat c, int order);
    static ExactScalar from_rational(RationalFunc f, int order);
    static ExactScalar coordinate(int k, int order);
    static ExactScalar hbar(int order);           // truncates to 0 when order == 0
    static ExactScalar grassmann(int alpha, int order);
    static ExactScalar term(int hpow, GrassMask mask, RationalFunc f, int order);

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    // coefficient at (hbar^0, empty mask); zero when absent
    RationalFunc body() const;
    // nullopt when terms of both parities are present; zero counts as even
    std::optional<Parity> parity() const;
    // the hbar^0 slice, Grassmann mask -> coefficient
    std::map<GrassMask, RationalFunc> classical_part() const;

    void add_term(int hpow, GrassMask mask, const RationalFunc& f);

    friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

    std::string str() const;

private:
    int order_;
    TermMap terms_;
};

ExactScalar add(const ExactScalar& a, const ExactScalar& b);
ExactScalar sub(const ExactScalar& a, const ExactScalar& b);
ExactScalar neg(const ExactScalar& a);
ExactScalar scalar_mul(const Rat& c, const ExactScalar& a);

// Moyal star product, truncated at the common order:
//   f * g = sum_n (hbar^n / n!) sum_k (-1)^k C(n,k)
//           (d1^{n-k} d2^k f)(d1^k d2^{n-k} g),
// extended to Grassmann coefficients by the wedge with its inversion
// sign.  Throws OrderMismatchError when the orders differ.
ExactScalar star(const ExactScalar& a, const ExactScalar& b);

// Graded derivation d/dt_k or d/dxi_alpha.
ExactScalar derive(FrameIndex I, const ExactScalar& a);

// Two-sided star inverse: body inversion followed by a terminating
// Neumann series in the nilpotent remainder.  Throws
// NotInvertibleError when the body vanishes.
ExactScalar star_inverse(const ExactScalar& a);

inline bool is_zero(const ExactScalar& a) { return a.is_zero(); }
inline std::string to_string(const ExactScalar& a) { return a.str(); }
inline std::optional<Parity> parity_of(const ExactScalar& a) { return a.parity(); }
inline ExactScalar zero_like(const ExactScalar& a) { return ExactScalar::zero(a.order()); }
inline ExactScalar one_like(const ExactScalar& a) { return ExactScalar::one(a.order()); }

} // namespace starsurf

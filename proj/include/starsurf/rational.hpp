#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>

namespace starsurf {

using Rat = mpq_class;

std::string rat_str(const Rat& r);

// Sparse polynomial in (t1, t2) over Q.  Terms are kept in descending
// lexicographic order (t1 before t2), so begin() is the leading term.
class Poly {
public:
    using Expo = std::array<int, 2>;

    struct LexDesc {
        bool operator()(const Expo& a, const Expo& b) const { return a > b; }
    };
    using TermMap = std::map<Expo, Rat, LexDesc>;

    Poly() = default;

    static Poly constant(Rat c);
    static Poly coordinate(int k);  // t_k, k in {1,2}
    static Poly monomial(Expo e, Rat c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rat constant_value() const;  // 0 for zero, requires is_constant otherwise
    int degree(int var) const;   // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    // leading term under the lex order; requires !is_zero()
    const std::pair<const Expo, Rat>& leading() const { return *terms_.begin(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rat& c) const;
    Poly mul_monomial(Expo e, const Rat& c) const;
    Poly derivative(int var) const;
    Poly pow(int n) const;  // n >= 0

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;

    void add_term(Expo e, Rat c);  // accumulates, drops zeros

private:
    TermMap terms_;
};

// gcd over Q[t1,t2], normalized so the lex-leading coefficient is 1.
// gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact division; nullopt when b does not divide a (or b = 0).
std::optional<Poly> poly_divide(const Poly& a, const Poly& b);

// Rational function in (t1, t2) kept in reduced normal form:
// gcd(num, den) = 1 and den has lex-leading coefficient 1.  Structural
// equality of normal forms is equality.
class RationalFunc {
public:
    RationalFunc() : den_(Poly::constant(1)) {}
    RationalFunc(Poly num, Poly den);  // normalizes; den must be nonzero
    /*implicit*/ RationalFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

    static RationalFunc constant(Rat c) { return RationalFunc(Poly::constant(std::move(c))); }
    static RationalFunc coordinate(int k) { return RationalFunc(Poly::coordinate(k)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunc operator-() const;
    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }

    RationalFunc scaled(const Rat& c) const;
    RationalFunc inverse() const;  // throws NotInvertibleError on zero
    RationalFunc derivative(int var) const;
    RationalFunc pow(int n) const;  // any integer exponent

    friend bool operator==(const RationalFunc&, const RationalFunc&) = default;

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

} // namespace starsurf

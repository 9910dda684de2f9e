#pragma once

#include "starsurf/grading.hpp"
#include "starsurf/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace starsurf {

enum class VarTag { T1, T2, Hbar, Param };

// A declared symbol: coordinate, abstract function atom f(t2), h(t1),
// f1(hbar), or a parameter.  Atoms declared positive admit star
// reciprocals.
struct AtomDecl {
    std::string name;
    VarTag var = VarTag::Param;
    bool positive = false;
    bool coordinate = false;
    Parity parity = kEven;
};

// Symbol environment of one surface: the two even coordinates, the odd
// generators, and every declared function atom and parameter.
class SymbolTable {
public:
    struct Resolved {
        enum class Kind { Coordinate, OddGenerator, Atom } kind;
        int id = 0;  // atom id, or generator index (1-based)
    };

    SymbolTable();

    int declare_coordinate(int k, std::string name);  // k in {1,2}
    int declare_odd(std::string name);                // returns alpha (1-based)
    int declare_atom(AtomDecl d);

    std::optional<Resolved> resolve(const std::string& name) const;
    const AtomDecl& atom(int id) const { return atoms_[id]; }
    int coordinate_atom(int k) const { return coord_atom_[k - 1]; }
    const std::string& odd_name(int alpha) const { return odd_names_[alpha - 1]; }
    int odd_count() const { return static_cast<int>(odd_names_.size()); }
    int atom_count() const { return static_cast<int>(atoms_.size()); }

private:
    std::vector<AtomDecl> atoms_;
    std::vector<std::string> odd_names_;
    std::map<std::string, Resolved> index_;
    int coord_atom_[2] = {-1, -1};
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

// A power of a (possibly differentiated) atom: f''^e.
struct AtomPow {
    int atom = 0;
    int deriv = 0;
    int exp = 1;
    auto operator<=>(const AtomPow&) const = default;
};

// Maximal run of same-variable factors; internally commutative.
struct WordGroup {
    VarTag tag;
    std::vector<AtomPow> atoms;
    auto operator<=>(const WordGroup&) const = default;
};

// Canonical unexpanded star product of atoms: parameter and
// hbar-dependent atoms (which commute with everything) followed by an
// alternating chain of t1/t2 groups.  The empty word is 1.
struct StarWord {
    std::vector<AtomPow> scalars;
    std::vector<WordGroup> chain;

    bool empty() const { return scalars.empty() && chain.empty(); }
    auto operator<=>(const StarWord&) const = default;

    static StarWord concat(const StarWord& a, const StarWord& b);
};

// Element of the symbolic backend: a sum of terms
//   c * hbar^p * word * xi-monomial
// in canonical form (like terms collected, zero constants dropped,
// adjacent same-variable groups merged).  Explicit hbar powers above
// the truncation order are dropped; atoms of hbar are opaque and never
// truncated.
class SymScalar {
public:
    struct Key {
        int hpow = 0;
        GrassMask mask = 0;
        StarWord word;
        auto operator<=>(const Key&) const = default;
    };
    using TermMap = std::map<Key, Rat>;

    SymScalar(SymbolTablePtr table, int order) : order_(order), table_(std::move(table)) {}

    static SymScalar zero(SymbolTablePtr t, int order) { return SymScalar(std::move(t), order); }
    static SymScalar one(SymbolTablePtr t, int order);
    static SymScalar constant(SymbolTablePtr t, Rat c, int order);
    static SymScalar hbar(SymbolTablePtr t, int order);
    static SymScalar grassmann(SymbolTablePtr t, int alpha, int order);
    // single atom power; throws ValidationError for odd-parity atoms
    static SymScalar atom(SymbolTablePtr t, int id, int deriv, int exp, int order);

    int order() const { return order_; }
    const SymbolTablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::optional<Parity> parity() const;

    void add_term(int hpow, GrassMask mask, StarWord word, const Rat& c);

    friend bool operator==(const SymScalar& a, const SymScalar& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int order_;
    SymbolTablePtr table_;
    TermMap terms_;
};

SymScalar add(const SymScalar& a, const SymScalar& b);
SymScalar sub(const SymScalar& a, const SymScalar& b);
SymScalar neg(const SymScalar& a);
SymScalar scalar_mul(const Rat& c, const SymScalar& a);

// Star product with star-words kept unexpanded: words concatenate and
// canonicalize, Grassmann parts wedge, explicit hbar powers add.
SymScalar star(const SymScalar& a, const SymScalar& b);

// Graded derivation: product rule across groups for d/dt_k, the left
// Grassmann derivative for d/dxi_alpha.
SymScalar derive(FrameIndex I, const SymScalar& a);

// Star reciprocal.  The body must be a single term whose atoms are all
// underived and declared positive; the nilpotent remainder is handled
// by a terminating Neumann series.
SymScalar star_inverse(const SymScalar& a);

inline bool is_zero(const SymScalar& a) { return a.is_zero(); }
inline std::string to_string(const SymScalar& a) { return a.str(); }
inline std::optional<Parity> parity_of(const SymScalar& a) { return a.parity(); }
inline SymScalar zero_like(const SymScalar& a) { return SymScalar::zero(a.table(), a.order()); }
inline SymScalar one_like(const SymScalar& a) { return SymScalar::one(a.table(), a.order()); }

} // namespace starsurf

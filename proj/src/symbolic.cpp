#include "starsurf/symbolic.hpp"

#include "starsurf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace starsurf {

// ------------------------------------------------------- SymbolTable

SymbolTable::SymbolTable() = default;

int SymbolTable::declare_coordinate(int k, std::string name) {
    if (index_.count(name)) throw ValidationError("duplicate symbol '" + name + "'");
    AtomDecl d;
    d.name = name;
    d.var = k == 1 ? VarTag::T1 : VarTag::T2;
    d.coordinate = true;
    int id = static_cast<int>(atoms_.size());
    atoms_.push_back(std::move(d));
    coord_atom_[k - 1] = id;
    index_.emplace(std::move(name), Resolved{Resolved::Kind::Coordinate, id});
    return id;
}

int SymbolTable::declare_odd(std::string name) {
    if (index_.count(name)) throw ValidationError("duplicate symbol '" + name + "'");
    odd_names_.push_back(name);
    int alpha = static_cast<int>(odd_names_.size());
    index_.emplace(std::move(name), Resolved{Resolved::Kind::OddGenerator, alpha});
    return alpha;
}

int SymbolTable::declare_atom(AtomDecl d) {
    if (index_.count(d.name)) throw ValidationError("duplicate symbol '" + d.name + "'");
    int id = static_cast<int>(atoms_.size());
    std::string name = d.name;
    atoms_.push_back(std::move(d));
    index_.emplace(std::move(name), Resolved{Resolved::Kind::Atom, id});
    return id;
}

std::optional<SymbolTable::Resolved> SymbolTable::resolve(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------- StarWord

namespace {

// sort by (atom, deriv), add exponents of equal keys, drop zeros
void merge_atom_list(std::vector<AtomPow>& v) {
    std::sort(v.begin(), v.end(), [](const AtomPow& a, const AtomPow& b) {
        return std::tie(a.atom, a.deriv) < std::tie(b.atom, b.deriv);
    });
    std::vector<AtomPow> out;
    for (const auto& p : v) {
        if (!out.empty() && out.back().atom == p.atom && out.back().deriv == p.deriv) {
            out.back().exp += p.exp;
            if (out.back().exp == 0) out.pop_back();
        } else if (p.exp != 0) {
            out.push_back(p);
        }
    }
    v = std::move(out);
}

struct WordBuilder {
    StarWord w;

    void push_scalar(const AtomPow& p) { w.scalars.push_back(p); }

    void push_group(WordGroup g) {
        merge_atom_list(g.atoms);
        if (g.atoms.empty()) return;
        if (!w.chain.empty() && w.chain.back().tag == g.tag) {
            auto& back = w.chain.back();
            back.atoms.insert(back.atoms.end(), g.atoms.begin(), g.atoms.end());
            merge_atom_list(back.atoms);
            // a fully cancelled group exposes its neighbours to each other
            if (back.atoms.empty()) {
                w.chain.pop_back();
            }
            return;
        }
        w.chain.push_back(std::move(g));
    }

    void push_word(const StarWord& o) {
        for (const auto& s : o.scalars) push_scalar(s);
        for (const auto& g : o.chain) push_group(g);
    }

    StarWord take() {
        merge_atom_list(w.scalars);
        // pushing a group after a cancellation can leave two adjacent
        // same-tag groups only via pop_back, which push_group re-merges;
        // nothing further to do here
        return std::move(w);
    }
};

} // namespace

StarWord StarWord::concat(const StarWord& a, const StarWord& b) {
    WordBuilder builder;
    builder.push_word(a);
    builder.push_word(b);
    return builder.take();
}

// ---------------------------------------------------------- SymScalar

SymScalar SymScalar::one(SymbolTablePtr t, int order) { return constant(std::move(t), 1, order); }

SymScalar SymScalar::constant(SymbolTablePtr t, Rat c, int order) {
    SymScalar s(std::move(t), order);
    s.add_term(0, 0, StarWord{}, c);
    return s;
}

SymScalar SymScalar::hbar(SymbolTablePtr t, int order) {
    SymScalar s(std::move(t), order);
    s.add_term(1, 0, StarWord{}, 1);
    return s;
}

SymScalar SymScalar::grassmann(SymbolTablePtr t, int alpha, int order) {
    SymScalar s(std::move(t), order);
    s.add_term(0, GrassMask{1} << (alpha - 1), StarWord{}, 1);
    return s;
}

SymScalar SymScalar::atom(SymbolTablePtr t, int id, int deriv, int exp, int order) {
    const AtomDecl& d = t->atom(id);
    if (d.parity.odd())
        throw ValidationError("odd symbol '" + d.name + "' cannot enter a computation");
    if (deriv > 0 && (d.var == VarTag::Hbar || d.var == VarTag::Param || d.coordinate))
        throw ValidationError("'" + d.name + "' admits no t-derivative");
    SymScalar s(std::move(t), order);
    if (exp == 0) {
        s.add_term(0, 0, StarWord{}, 1);
        return s;
    }
    StarWord w;
    AtomPow p{id, deriv, exp};
    if (d.var == VarTag::Hbar || d.var == VarTag::Param) {
        w.scalars.push_back(p);
    } else {
        w.chain.push_back(WordGroup{d.var, {p}});
    }
    s.add_term(0, 0, std::move(w), 1);
    return s;
}

bool SymScalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [key, c] = *terms_.begin();
    return key.hpow == 0 && key.mask == 0 && key.word.empty() && c == 1;
}

std::optional<Parity> SymScalar::parity() const {
    std::optional<Parity> p;
    for (const auto& [key, c] : terms_) {
        Parity q = grass_parity(key.mask);
        if (!p) {
            p = q;
        } else if (*p != q) {
            return std::nullopt;
        }
    }
    return p ? p : std::optional<Parity>(kEven);
}

void SymScalar::add_term(int hpow, GrassMask mask, StarWord word, const Rat& c) {
    if (hpow > order_ || c == 0) return;
    Key k{hpow, mask, std::move(word)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

SymbolTablePtr common_table(const SymScalar& a, const SymScalar& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("mismatched truncation orders " + std::to_string(a.order()) +
                                 " and " + std::to_string(b.order()));
    return a.table() ? a.table() : b.table();
}

} // namespace

SymScalar add(const SymScalar& a, const SymScalar& b) {
    SymScalar r(common_table(a, b), a.order());
    for (const auto& [key, c] : a.terms()) r.add_term(key.hpow, key.mask, key.word, c);
    for (const auto& [key, c] : b.terms()) r.add_term(key.hpow, key.mask, key.word, c);
    return r;
}

SymScalar sub(const SymScalar& a, const SymScalar& b) { return add(a, neg(b)); }

SymScalar neg(const SymScalar& a) {
    SymScalar r(a.table(), a.order());
    for (const auto& [key, c] : a.terms()) r.add_term(key.hpow, key.mask, key.word, -c);
    return r;
}

SymScalar scalar_mul(const Rat& c, const SymScalar& a) {
    SymScalar r(a.table(), a.order());
    if (c == 0) return r;
    for (const auto& [key, k] : a.terms()) r.add_term(key.hpow, key.mask, key.word, Rat(k * c));
    return r;
}

SymScalar star(const SymScalar& a, const SymScalar& b) {
    SymScalar r(common_table(a, b), a.order());
    const int N = a.order();
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            int h = ka.hpow + kb.hpow;
            if (h > N) continue;
            auto merged = grass_merge(ka.mask, kb.mask);
            if (!merged) continue;
            r.add_term(h, merged->first, StarWord::concat(ka.word, kb.word),
                       Rat(ca * cb * merged->second));
        }
    }
    return r;
}

SymScalar derive(FrameIndex I, const SymScalar& a) {
    SymScalar r(a.table(), a.order());
    if (I.is_odd()) {
        for (const auto& [key, c] : a.terms()) {
            auto d = grass_derive(key.mask, I.index());
            if (!d) continue;
            r.add_term(key.hpow, d->first, key.word, Rat(c * d->second));
        }
        return r;
    }
    VarTag tag = I.index() == 1 ? VarTag::T1 : VarTag::T2;
    const SymbolTable& tbl = *a.table();
    for (const auto& [key, c] : a.terms()) {
        for (size_t gi = 0; gi < key.word.chain.size(); ++gi) {
            if (key.word.chain[gi].tag != tag) continue;
            const auto& group = key.word.chain[gi];
            for (size_t ai = 0; ai < group.atoms.size(); ++ai) {
                const AtomPow& p = group.atoms[ai];
                // d/dt (f^e) = e f^{e-1} f'
                WordGroup g;
                g.tag = tag;
                for (size_t aj = 0; aj < group.atoms.size(); ++aj) {
                    if (aj == ai) continue;
                    g.atoms.push_back(group.atoms[aj]);
                }
                g.atoms.push_back(AtomPow{p.atom, p.deriv, p.exp - 1});
                if (!tbl.atom(p.atom).coordinate)
                    g.atoms.push_back(AtomPow{p.atom, p.deriv + 1, 1});
                WordBuilder builder;
                for (const auto& s : key.word.scalars) builder.push_scalar(s);
                for (size_t gj = 0; gj < key.word.chain.size(); ++gj) {
                    if (gj == gi) {
                        builder.push_group(std::move(g));
                    } else {
                        builder.push_group(key.word.chain[gj]);
                    }
                }
                r.add_term(key.hpow, key.mask, builder.take(), Rat(c * p.exp));
            }
        }
    }
    return r;
}

SymScalar star_inverse(const SymScalar& a) {
    const SymbolTable& tbl = *a.table();
    // collect the body: explicit hbar^0, empty Grassmann monomial
    std::vector<std::pair<SymScalar::Key, Rat>> body;
    for (const auto& [key, c] : a.terms())
        if (key.hpow == 0 && key.mask == 0) body.emplace_back(key, c);
    if (body.empty()) throw NotInvertibleError("scalar is not invertible: zero body");
    if (body.size() > 1)
        throw NotInvertibleError("no star-word reciprocal: body is a sum of words");

    const auto& [bkey, bc] = body.front();
    auto invertible = [&](const AtomPow& p) {
        const AtomDecl& d = tbl.atom(p.atom);
        return d.positive && p.deriv == 0;
    };
    StarWord inv;
    for (const auto& p : bkey.word.scalars) {
        if (!invertible(p))
            throw NotInvertibleError("no star-word reciprocal: atom '" +
                                     tbl.atom(p.atom).name + "' is not declared positive");
        inv.scalars.push_back(AtomPow{p.atom, p.deriv, -p.exp});
    }
    for (auto it = bkey.word.chain.rbegin(); it != bkey.word.chain.rend(); ++it) {
        WordGroup g;
        g.tag = it->tag;
        for (const auto& p : it->atoms) {
            if (!invertible(p))
                throw NotInvertibleError("no star-word reciprocal: atom '" +
                                         tbl.atom(p.atom).name + "' is not declared positive");
            g.atoms.push_back(AtomPow{p.atom, p.deriv, -p.exp});
        }
        merge_atom_list(g.atoms);
        inv.chain.push_back(std::move(g));
    }
    SymScalar x0(a.table(), a.order());
    x0.add_term(0, 0, std::move(inv), Rat(1 / bc));

    SymScalar e = sub(star(a, x0), SymScalar::one(a.table(), a.order()));
    if (e.is_zero()) return x0;
    SymScalar series = SymScalar::one(a.table(), a.order());
    SymScalar power = series;
    int cap = a.order() + 33;
    for (int k = 1; k <= cap && !power.is_zero(); ++k) {
        power = neg(star(power, e));
        series = add(series, power);
    }
    return star(x0, series);
}

// ---------------------------------------------------------- printing

namespace {

void print_atom(std::ostream& os, const SymbolTable& tbl, const AtomPow& p) {
    const AtomDecl& d = tbl.atom(p.atom);
    os << d.name;
    for (int i = 0; i < p.deriv; ++i) os << '\'';
    if (!d.coordinate && (d.var == VarTag::T1 || d.var == VarTag::T2)) {
        int k = d.var == VarTag::T1 ? 1 : 2;
        os << '(' << tbl.atom(tbl.coordinate_atom(k)).name << ')';
    }
    if (p.exp != 1) os << '^' << p.exp;
}

} // namespace

std::string SymScalar::str() const {
    if (terms_.empty()) return "0";
    const SymbolTable& tbl = *table_;
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        Rat a = c;
        bool negative = a < 0;
        if (negative) a = -a;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;

        std::vector<std::string> factors;
        auto emit = [&](const AtomPow& p) {
            std::ostringstream f;
            print_atom(f, tbl, p);
            factors.push_back(f.str());
        };
        for (const auto& p : key.word.scalars)
            if (tbl.atom(p.atom).var == VarTag::Param) emit(p);
        for (int g = 0; g < 32; ++g)
            if (key.mask & (GrassMask{1} << g)) factors.push_back(tbl.odd_name(g + 1));
        for (const auto& p : key.word.scalars)
            if (tbl.atom(p.atom).var == VarTag::Hbar) emit(p);
        if (key.hpow == 1) factors.push_back("hbar");
        if (key.hpow > 1) factors.push_back("hbar^" + std::to_string(key.hpow));
        for (const auto& g : key.word.chain)
            for (const auto& p : g.atoms) emit(p);

        if (factors.empty()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << " * ";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << " * ";
                os << factors[i];
            }
        }
    }
    return os.str();
}

} // namespace starsurf

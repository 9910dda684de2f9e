#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace starsurf {

// Z2 degree. Degrees add mod 2 under multiplication.
struct Parity {
    int v = 0;

    bool odd() const { return v != 0; }
    friend Parity operator+(Parity a, Parity b) { return Parity{(a.v + b.v) & 1}; }
    friend bool operator==(const Parity&, const Parity&) = default;
};

inline constexpr Parity kEven{0};
inline constexpr Parity kOdd{1};

// (-1)^e
inline int sign_pow(int e) { return (e & 1) ? -1 : 1; }

// Koszul sign (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return sign_pow(a.v * b.v); }

// A frame direction: d/dt_k (even, k in {1,2}) or d/dxi_alpha (odd,
// alpha in {1..P}).  |d/dt_k| = 0, |d/dxi_alpha| = 1.
class FrameIndex {
public:
    static FrameIndex even(int k) { return FrameIndex(false, k); }
    static FrameIndex odd(int alpha) { return FrameIndex(true, alpha); }

    bool is_odd() const { return odd_; }
    int index() const { return idx_; }  // 1-based
    Parity parity() const { return odd_ ? kOdd : kEven; }
    // 0-based slot in the standard frame order t1, t2, xi1, ..., xiP.
    int position() const { return odd_ ? 1 + idx_ : idx_ - 1; }

    std::string label() const {
        return odd_ ? "xi" + std::to_string(idx_) : "t" + std::to_string(idx_);
    }

    friend bool operator==(const FrameIndex&, const FrameIndex&) = default;

private:
    FrameIndex(bool odd, int idx) : odd_(odd), idx_(idx) {}
    bool odd_;
    int idx_;
};

// Grassmann monomials xi^{i1}...xi^{ik}, i1 < ... < ik, as bit masks
// (bit a-1 set <=> generator xi_a present).  The empty mask is 1.
using GrassMask = std::uint32_t;

inline int grass_degree(GrassMask m) { return std::popcount(m); }
inline Parity grass_parity(GrassMask m) { return Parity{grass_degree(m) & 1}; }

// Wedge of two monomials.  nullopt when a generator repeats (product is
// zero); otherwise the merged mask and the (-1)^{#inversions} sign of
// sorting the concatenation into ascending order.
inline std::optional<std::pair<GrassMask, int>> grass_merge(GrassMask a, GrassMask b) {
    if (a & b) return std::nullopt;
    int inversions = 0;
    GrassMask rest = b;
    while (rest) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        // generators of a strictly above g must hop over xi_{g+1}
        inversions += std::popcount(a >> (g + 1));
    }
    return std::make_pair(a | b, sign_pow(inversions));
}

// Left derivative d/dxi_alpha (alpha 1-based).  nullopt when the
// generator is absent (derivative is zero); otherwise the reduced mask
// and the sign (-1)^{#generators preceding alpha}.
inline std::optional<std::pair<GrassMask, int>> grass_derive(GrassMask m, int alpha) {
    GrassMask bit = GrassMask{1} << (alpha - 1);
    if (!(m & bit)) return std::nullopt;
    int preceding = std::popcount(m & (bit - 1));
    return std::make_pair(m & ~bit, sign_pow(preceding));
}

} // namespace starsurf

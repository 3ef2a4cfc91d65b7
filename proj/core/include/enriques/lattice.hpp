#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Arithmetic in the rank-10 lattice U + E8(-1).
//
// Coordinates are taken in a basis v1..v10: v1, v2 span the hyperbolic plane U
// (Gram [[0,1],[1,0]]) and v3..v10 are simple roots of E8 with Gram equal to the
// negative Cartan matrix below. v1 is the reference isotropic vector used to
// define positivity.

namespace enriques::lattice {

inline constexpr std::size_t kRank = 10;
inline constexpr std::size_t kE8Rank = 8;

using E8Vector = std::array<std::int64_t, kE8Rank>;

/// Negative Cartan matrix of E8 in the root ordering used throughout.
inline constexpr std::array<std::array<std::int64_t, kE8Rank>, kE8Rank> kE8Gram{{
    {-2, 0, 1, 0, 0, 0, 0, 0},
    {0, -2, 0, 1, 0, 0, 0, 0},
    {1, 0, -2, 1, 0, 0, 0, 0},
    {0, 1, 1, -2, 1, 0, 0, 0},
    {0, 0, 0, 1, -2, 1, 0, 0},
    {0, 0, 0, 0, 1, -2, 1, 0},
    {0, 0, 0, 0, 0, 1, -2, 1},
    {0, 0, 0, 0, 0, 0, 1, -2},
}};

class LatticeVector {
public:
    constexpr LatticeVector() = default;
    constexpr explicit LatticeVector(const std::array<std::int64_t, kRank>& coords) : coords_(coords) {}
    LatticeVector(std::int64_t b1, std::int64_t b2, const E8Vector& e8 = {});

    /// The basis vector v_i, 1 <= i <= 10.
    static LatticeVector basis(std::size_t i);

    /// Parses a comma-separated 10-tuple "b1,b2,e1,...,e8".
    /// Throws std::invalid_argument when malformed.
    static LatticeVector parse(std::string_view text);
    std::string str() const;

    std::int64_t b1() const { return coords_[0]; }
    std::int64_t b2() const { return coords_[1]; }
    E8Vector e8() const;
    bool is_zero() const;

    const std::array<std::int64_t, kRank>& coords() const { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    LatticeVector& operator+=(const LatticeVector& rhs);
    LatticeVector& operator-=(const LatticeVector& rhs);
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);
    LatticeVector operator-() const { return -1 * *this; }

    /// Exact division of every coordinate; throws if k does not divide.
    LatticeVector divided_by(std::int64_t k) const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

private:
    std::array<std::int64_t, kRank> coords_{};
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct LatticeVectorHash {
    std::size_t operator()(const LatticeVector& v) const noexcept;
};

/// Bilinear pairing <u, v>.
std::int64_t pair(const LatticeVector& u, const LatticeVector& v);

/// <beta, beta>; always even.
std::int64_t square(const LatticeVector& beta);

/// b2 > 0, or b2 == 0 and beta is a positive multiple of v1.
bool is_positive(const LatticeVector& beta);

/// gcd of the coordinates. Throws std::invalid_argument for the zero vector.
std::int64_t divisibility(const LatticeVector& beta);

/// Pairing restricted to the E8(-1) block.
std::int64_t e8_pair(const E8Vector& x, const E8Vector& y);

/// -<x, x> on the E8(-1) block (non-negative).
std::int64_t e8_norm(const E8Vector& x);

/// All x in the E8 block with e8_norm(x) <= bound, sorted by (norm, coordinates).
/// Branch and bound over the Cholesky factorisation of the positive definite
/// negated Gram block.
std::vector<E8Vector> short_vectors(std::int64_t bound);

/// Calls `visit` for every x with e8_norm(x - center/2) <= radius2/4, i.e.
/// e8_norm(2x - center) <= radius2. Half-integral centres are
/// expressed through the doubled centre.
void for_each_in_ellipsoid(const E8Vector& doubled_center, std::int64_t radius2,
                           const std::function<void(const E8Vector&)>& visit);

/// Dominant representative of the Weyl group orbit of x (Q(x, alpha_i) >= 0
/// for every simple root). Two vectors lie in one W(E8) orbit iff their
/// representatives coincide.
E8Vector weyl_dominant(E8Vector x);

/// beta with its E8 part replaced by the dominant representative. W(E8) fixes
/// the U block, so pairing, positivity and divisibility are preserved.
LatticeVector orbit_representative(const LatticeVector& beta);

using Decomposition = std::pair<LatticeVector, LatticeVector>;
using DecompositionVisitor = std::function<void(const LatticeVector&, const LatticeVector&)>;

/// Streams the same pairs as enumerate_decompositions, in no particular order.
void for_each_decomposition(const LatticeVector& beta, const DecompositionVisitor& visit);

/// Ordered pairs (b1, b2) with b1 + b2 = beta, both nonzero, positive and of
/// non-negative square, sorted lexicographically on the first component.
/// Throws std::invalid_argument when beta is not positive.
std::vector<Decomposition> enumerate_decompositions(const LatticeVector& beta);

}  // namespace enriques::lattice

#include "enriques/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace enriques::lattice {

namespace {

// Cholesky data for Q(y) = -<y,y>_{E8(-1)} in reversed coordinates
// z_i = y_{7-i}, written as
//   Q = sum_i diag[i] * (z_i + sum_{j>i} mu[i][j] z_j)^2.
// The walk fixes z_7 = y_0 first, so points come out in lexicographic order of y.
struct E8Cholesky {
    std::array<double, kE8Rank> diag{};
    std::array<std::array<double, kE8Rank>, kE8Rank> mu{};

    E8Cholesky() {
        std::array<std::array<double, kE8Rank>, kE8Rank> a{};
        for (std::size_t i = 0; i < kE8Rank; ++i)
            for (std::size_t j = 0; j < kE8Rank; ++j)
                a[i][j] = -static_cast<double>(kE8Gram[kE8Rank - 1 - i][kE8Rank - 1 - j]);
        for (std::size_t i = 0; i < kE8Rank; ++i) {
            diag[i] = a[i][i];
            for (std::size_t j = i + 1; j < kE8Rank; ++j) mu[i][j] = a[i][j] / a[i][i];
            for (std::size_t k = i + 1; k < kE8Rank; ++k)
                for (std::size_t l = i + 1; l < kE8Rank; ++l) a[k][l] -= mu[i][k] * a[i][l];
        }
    }
};

const E8Cholesky& cholesky() {
    static const E8Cholesky c;
    return c;
}

// Floating bounds are widened by this slack; every candidate is then
// re-checked with exact integer arithmetic.
constexpr double kSlack = 1e-7;

// With Exact = false the final integer test is left to the caller, which
// then sees a few points just outside the ellipsoid.
template <bool Exact = true, typename Visit>
void enumerate_ellipsoid(const E8Vector& doubled_center, std::int64_t radius2, Visit&& visit) {
    if (radius2 < 0) return;
    const E8Cholesky& ch = cholesky();
    std::array<double, kE8Rank> center{};
    for (std::size_t i = 0; i < kE8Rank; ++i) center[i] = 0.5 * static_cast<double>(doubled_center[kE8Rank - 1 - i]);
    const double budget = static_cast<double>(radius2) / 4.0;

    E8Vector x{};  // reversed coordinates
    E8Vector y{};

    // Walk coordinates from the last to the first.
    auto recurse = [&](auto&& self, int level, double used) -> void {
        const auto i = static_cast<std::size_t>(level);
        double c = center[i];
        for (std::size_t j = i + 1; j < kE8Rank; ++j) c -= ch.mu[i][j] * (static_cast<double>(x[j]) - center[j]);
        const double remaining = budget - used;
        if (remaining < -kSlack) return;
        const double half_width = std::sqrt(std::max(0.0, remaining) / ch.diag[i]) + kSlack;
        const auto lo = static_cast<std::int64_t>(std::ceil(c - half_width));
        const auto hi = static_cast<std::int64_t>(std::floor(c + half_width));
        for (std::int64_t v = lo; v <= hi; ++v) {
            x[i] = v;
            const double t = static_cast<double>(v) - c;
            const double next = used + ch.diag[i] * t * t;
            if (level == 0) {
                for (std::size_t k = 0; k < kE8Rank; ++k) y[k] = x[kE8Rank - 1 - k];
                if constexpr (Exact) {
                    E8Vector doubled_shift{};
                    for (std::size_t k = 0; k < kE8Rank; ++k) doubled_shift[k] = 2 * y[k] - doubled_center[k];
                    if (e8_norm(doubled_shift) > radius2) continue;
                }
                visit(static_cast<const E8Vector&>(y));
            } else {
                self(self, level - 1, next);
            }
        }
    };
    recurse(recurse, static_cast<int>(kE8Rank) - 1, 0.0);
}

void check_rank(std::size_t n) {
    if (n != kRank) throw std::invalid_argument("lattice vector needs exactly 10 coordinates, got " + std::to_string(n));
}

}  // namespace

LatticeVector::LatticeVector(std::int64_t b1, std::int64_t b2, const E8Vector& e8) {
    coords_[0] = b1;
    coords_[1] = b2;
    std::copy(e8.begin(), e8.end(), coords_.begin() + 2);
}

LatticeVector LatticeVector::basis(std::size_t i) {
    if (i < 1 || i > kRank) throw std::invalid_argument("basis index must lie in 1..10");
    std::array<std::int64_t, kRank> c{};
    c[i - 1] = 1;
    return LatticeVector(c);
}

LatticeVector LatticeVector::parse(std::string_view text) {
    std::array<std::int64_t, kRank> c{};
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string field(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        // Trim surrounding blanks.
        const auto first = field.find_first_not_of(" \t");
        const auto last = field.find_last_not_of(" \t");
        field = first == std::string::npos ? std::string() : field.substr(first, last - first + 1);
        if (field.empty()) throw std::invalid_argument("malformed lattice vector: '" + std::string(text) + "'");
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(field, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed lattice vector: '" + std::string(text) + "'");
        }
        if (used != field.size()) throw std::invalid_argument("malformed lattice vector: '" + std::string(text) + "'");
        if (count == kRank) check_rank(count + 1);
        c[count++] = value;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    check_rank(count);
    return LatticeVector(c);
}

std::string LatticeVector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

E8Vector LatticeVector::e8() const {
    E8Vector e{};
    std::copy(coords_.begin() + 2, coords_.end(), e.begin());
    return e;
}

bool LatticeVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& rhs) {
    for (std::size_t i = 0; i < kRank; ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& rhs) {
    for (std::size_t i = 0; i < kRank; ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
    LatticeVector r = v;
    for (auto& c : r.coords_) c *= k;
    return r;
}

LatticeVector LatticeVector::divided_by(std::int64_t k) const {
    if (k == 0) throw std::invalid_argument("division of a lattice vector by zero");
    LatticeVector r = *this;
    for (auto& c : r.coords_) {
        if (c % k != 0) throw std::invalid_argument("lattice vector not divisible by " + std::to_string(k));
        c /= k;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    for (std::size_t i = 0; i < kRank; ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os;
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::int64_t c : v.coords()) {
        h ^= static_cast<std::uint64_t>(c) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::int64_t e8_pair(const E8Vector& x, const E8Vector& y) {
    // Tridiagonal-plus-branch structure of the Cartan matrix.
    std::int64_t s = 0;
    for (std::size_t i = 0; i < kE8Rank; ++i) s -= 2 * x[i] * y[i];
    auto edge = [&](std::size_t a, std::size_t b) { s += x[a] * y[b] + x[b] * y[a]; };
    edge(0, 2);
    edge(1, 3);
    edge(2, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    return s;
}

std::int64_t e8_norm(const E8Vector& x) { return -e8_pair(x, x); }

std::int64_t pair(const LatticeVector& u, const LatticeVector& v) {
    return u.b1() * v.b2() + u.b2() * v.b1() + e8_pair(u.e8(), v.e8());
}

std::int64_t square(const LatticeVector& beta) { return pair(beta, beta); }

bool is_positive(const LatticeVector& beta) {
    if (beta.b2() > 0) return true;
    if (beta.b2() < 0 || beta.b1() <= 0) return false;
    const auto& c = beta.coords();
    return std::all_of(c.begin() + 2, c.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t divisibility(const LatticeVector& beta) {
    if (beta.is_zero()) throw std::invalid_argument("zero class has no divisibility");
    std::int64_t g = 0;
    for (std::int64_t c : beta.coords()) g = std::gcd(g, c);
    return g;
}

void for_each_in_ellipsoid(const E8Vector& doubled_center, std::int64_t radius2,
                           const std::function<void(const E8Vector&)>& visit) {
    enumerate_ellipsoid(doubled_center, radius2, visit);
}

std::vector<E8Vector> short_vectors(std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("short_vectors bound must be non-negative");
    std::vector<E8Vector> out;
    enumerate_ellipsoid(E8Vector{}, 4 * bound, [&](const E8Vector& x) { out.push_back(x); });
    std::sort(out.begin(), out.end(), [](const E8Vector& a, const E8Vector& b) {
        const auto na = e8_norm(a);
        const auto nb = e8_norm(b);
        return na != nb ? na < nb : a < b;
    });
    return out;
}

E8Vector weyl_dominant(E8Vector x) {
    // Reflect in any simple root pairing negatively with x; each step only
    // touches one coordinate: x_i -= (C x)_i with C the Cartan matrix.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kE8Rank; ++i) {
            std::int64_t c = 0;
            for (std::size_t j = 0; j < kE8Rank; ++j) c -= kE8Gram[i][j] * x[j];
            if (c < 0) {
                x[i] -= c;
                changed = true;
            }
        }
    }
    return x;
}

LatticeVector orbit_representative(const LatticeVector& beta) {
    return LatticeVector(beta.b1(), beta.b2(), weyl_dominant(beta.e8()));
}

namespace {

// Emits decompositions sorted on the first summand: the U part (p1, p2) runs
// lexicographically and the ellipsoid walk is itself lexicographic.
template <typename Visit>
void decompose(const LatticeVector& beta, Visit&& visit) {
    if (!is_positive(beta)) throw std::invalid_argument("decompositions require a positive class, got " + beta.str());
    const LatticeVector v1 = LatticeVector::basis(1);
    const std::int64_t b1 = beta.b1();
    const std::int64_t b2 = beta.b2();

    if (b2 == 0) {
        for (std::int64_t k = 1; k < b1; ++k) visit(k * v1, (b1 - k) * v1);
        return;
    }

    // A summand with p2 = 0 or p2 = b2 is a multiple k*v1 and the other keeps
    // square sq - 2 k b2, so k <= sq / (2 b2).
    const std::int64_t sq = square(beta);
    const std::int64_t k_max = sq >= 0 ? sq / (2 * b2) : 0;

    const E8Vector e = beta.e8();
    const std::int64_t norm_e = e8_norm(e);
    E8Vector doubled_e{};
    for (std::size_t i = 0; i < kE8Rank; ++i) doubled_e[i] = 2 * e[i];

    for (std::int64_t p1 = 0; p1 <= b1; ++p1) {
        for (std::int64_t p2 = 0; p2 <= b2; ++p2) {
            if (p2 == 0) {
                if (p1 >= 1 && p1 <= k_max) visit(p1 * v1, beta - p1 * v1);
                continue;
            }
            if (p2 == b2) {
                const std::int64_t k = b1 - p1;
                if (k >= 1 && k <= k_max) visit(beta - k * v1, k * v1);
                continue;
            }
            const std::int64_t bound1 = 2 * p1 * p2;
            const std::int64_t bound2 = 2 * (b1 - p1) * (b2 - p2);
            // Candidate regions for the E8 part x of the first summand:
            //   Q(x) <= bound1, Q(e - x) <= bound2, and their consequence
            //   Q(2x - e) <= 2(bound1 + bound2) - Q(e). Walk the smallest.
            const std::int64_t mid2 = 2 * (bound1 + bound2) - norm_e;
            if (mid2 < 0) continue;
            E8Vector center{};
            std::int64_t r2 = 4 * bound1;
            if (4 * bound2 < r2) {
                center = doubled_e;
                r2 = 4 * bound2;
            }
            if (mid2 < r2) {
                center = e;
                r2 = mid2;
            }
            // The region test itself is skipped: both defining inequalities are
            // checked exactly here, and the region contains every solution.
            enumerate_ellipsoid<false>(center, r2, [&](const E8Vector& x) {
                if (e8_norm(x) > bound1) return;
                E8Vector rest{};
                for (std::size_t i = 0; i < kE8Rank; ++i) rest[i] = e[i] - x[i];
                if (e8_norm(rest) > bound2) return;
                visit(LatticeVector(p1, p2, x), LatticeVector(b1 - p1, b2 - p2, rest));
            });
        }
    }
}

}  // namespace

void for_each_decomposition(const LatticeVector& beta, const DecompositionVisitor& visit) {
    decompose(beta, visit);
}

std::vector<Decomposition> enumerate_decompositions(const LatticeVector& beta) {
    std::vector<Decomposition> out;
    decompose(beta, [&](const LatticeVector& a, const LatticeVector& b) { out.emplace_back(a, b); });
    return out;
}

}  // namespace enriques::lattice

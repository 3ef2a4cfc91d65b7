#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques::qseries {

inline constexpr std::int64_t kDefaultOrder = 64;

/// Truncated Laurent series  sum_{n = offset}^{offset + order} a_n q^n + O(q^{offset + order + 1}).
///
/// The stored order is always explicit. Binary operations keep only the
/// exponents known in both operands: addition truncates at the smaller top
/// exponent, multiplication at offset_a + offset_b + min(order_a, order_b).
class QSeries {
public:
    QSeries() = default;
    /// `coeffs[i]` is the coefficient of q^(offset + i); order = coeffs.size() - 1.
    QSeries(std::int64_t offset, std::vector<Rational> coeffs);

    /// Constant series c + O(q^(order + 1)).
    static QSeries constant(const Rational& c, std::int64_t order);

    std::int64_t offset() const { return offset_; }
    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Highest exponent whose coefficient is known.
    std::int64_t top() const { return offset_ + order(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of q^n: zero below the offset, std::out_of_range above top().
    const Rational& coeff(std::int64_t n) const;

    /// Same series truncated to a smaller top exponent.
    QSeries truncated(std::int64_t new_top) const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const Rational& k);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& k) { return a *= k; }
    friend QSeries operator*(const Rational& k, QSeries a) { return a *= k; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// Multiplies by q^shift (moves the offset).
    QSeries shifted(std::int64_t shift) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::int64_t offset_ = 0;
    std::vector<Rational> coeffs_{Rational(0)};
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

}  // namespace enriques::qseries

#include "enriques/qseries.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace enriques::qseries {

namespace {
const Rational kZero{0};
}

QSeries::QSeries(std::int64_t offset, std::vector<Rational> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
    std::vector<Rational> coeffs(static_cast<std::size_t>(order + 1), Rational(0));
    coeffs[0] = c;
    return QSeries(0, std::move(coeffs));
}

const Rational& QSeries::coeff(std::int64_t n) const {
    if (n < offset_) return kZero;
    if (n > top()) {
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond truncation q^" + std::to_string(top()));
    }
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

QSeries QSeries::truncated(std::int64_t new_top) const {
    if (new_top > top()) throw std::out_of_range("cannot extend a truncated series");
    if (new_top < offset_) throw std::out_of_range("truncation below the series offset");
    return QSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (new_top - offset_ + 1)));
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    const std::int64_t lo = std::min(offset_, rhs.offset_);
    const std::int64_t hi = std::min(top(), rhs.top());
    if (hi < lo) throw std::out_of_range("sum of series has no known coefficients");
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = coeff(n) + rhs.coeff(n);
    offset_ = lo;
    coeffs_ = std::move(out);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) { return *this += rhs * Rational(-1); }

QSeries& QSeries::operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::int64_t order = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(order + 1));
    for (std::int64_t n = 0; n <= order; ++n) {
        Rational acc;
        for (std::int64_t i = 0; i <= n; ++i) {
            const Rational& x = a.coeffs_[static_cast<std::size_t>(i)];
            const Rational& y = b.coeffs_[static_cast<std::size_t>(n - i)];
            if (!x.is_zero() && !y.is_zero()) acc.add_product(x, y);
        }
        out[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return QSeries(a.offset_ + b.offset_, std::move(out));
}

QSeries QSeries::shifted(std::int64_t shift) const { return QSeries(offset_ + shift, coeffs_); }

std::ostream& operator<<(std::ostream& os, const QSeries& s) {
    bool first = true;
    for (std::int64_t n = s.offset(); n <= s.top(); ++n) {
        const Rational& c = s.coeff(n);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << c << ")q^" << n;
    }
    if (first) os << '0';
    return os << " + O(q^" << s.top() + 1 << ')';
}

}  // namespace enriques::qseries

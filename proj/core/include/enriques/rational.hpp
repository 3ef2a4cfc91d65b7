#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace enriques {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value);

    /// Parses "n" or "n/d" (optional leading sign, decimal digits only).
    /// Throws std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    /// Canonical text form: "n" for integers, "n/d" otherwise.
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    /// Adds a*b without materialising a temporary.
    Rational& add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Integer power; negative exponents invert (throws on 0^negative).
    static Rational pow(const Rational& base, std::int64_t exponent);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer.
Rational factorial(std::int64_t n);

/// Binomial coefficient C(n, k) for 0 <= k <= n, zero otherwise.
Rational binomial(std::int64_t n, std::int64_t k);

}  // namespace enriques

#include "enriques/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace enriques {

namespace {

bool is_signed_digits(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpq_class has no int64 constructor on every platform; go through mpz.
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    value_ = mpq_class(z);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpz_class n;
    mpz_class d;
    mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
    mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_signed_digits(num)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(num)));
    const std::string_view den = text.substr(slash + 1);
    if (den.empty() || !std::isdigit(static_cast<unsigned char>(den.front())) || !is_signed_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    const mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational& Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

Rational binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(c));
}

}  // namespace enriques

#include <doctest.h>

#include <random>

#include <enriques/modular.hpp>
#include <enriques/qseries.hpp>

using namespace enriques;
using namespace enriques::qseries;

namespace {

using Coeffs = std::vector<Rational>;

Rational sigma(std::int64_t power, std::int64_t n) {
    Rational s;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += Rational::pow(Rational(d), power);
    return s;
}

Coeffs naive_eisenstein(std::int64_t scale, std::int64_t power, std::int64_t order) {
    Coeffs c(static_cast<std::size_t>(order + 1));
    c[0] = Rational(1);
    for (std::int64_t n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = Rational(scale) * sigma(power, n);
    return c;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs c(std::min(a.size(), b.size()));
    for (std::size_t n = 0; n < c.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i) c[n] += a[i] * b[n - i];
    return c;
}

// prod (1 - q^{2n})^{-12} by multiplying geometric series one factor at a time.
Coeffs naive_eta(std::int64_t order) {
    Coeffs c(static_cast<std::size_t>(order + 1));
    c[0] = Rational(1);
    for (std::int64_t m = 2; m <= order; m += 2) {
        Coeffs geo(static_cast<std::size_t>(order + 1));
        for (std::int64_t k = 0; k <= order; k += m) geo[static_cast<std::size_t>(k)] = Rational(1);
        for (int r = 0; r < 12; ++r) c = mul(c, geo);
    }
    return c;
}

// Akiyama-Tanigawa algorithm for B_n (with B_1 = +1/2).
Rational akiyama_tanigawa(std::int64_t n) {
    std::vector<Rational> a(static_cast<std::size_t>(n + 1));
    for (std::int64_t m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (std::int64_t j = m; j >= 1; --j) {
            const auto J = static_cast<std::size_t>(j);
            a[J - 1] = Rational(j) * (a[J - 1] - a[J]);
        }
    }
    return a[0];
}

void check_series(const QSeries& s, std::int64_t offset, const Coeffs& expected) {
    CHECK(s.offset() == offset);
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.coeff(offset + static_cast<std::int64_t>(i)) == expected[i]);
}

Coeffs parse_all(std::initializer_list<const char*> texts) {
    Coeffs out;
    for (const char* t : texts) out.push_back(Rational::parse(t));
    return out;
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
    const QSeries a(0, {Rational(1), Rational(2), Rational(3)});
    const QSeries b(-1, {Rational(1), Rational(1)});
    const QSeries sum = a + b;
    CHECK(sum.offset() == -1);
    CHECK(sum.top() == 0);
    CHECK(sum.coeff(-1) == Rational(1));
    CHECK(sum.coeff(0) == Rational(2));
    CHECK_THROWS_AS(sum.coeff(1), std::out_of_range);
    CHECK(sum.coeff(-5) == Rational(0));

    const QSeries prod = a * b;
    CHECK(prod.offset() == -1);
    CHECK(prod.order() == 1);
    CHECK(prod.coeff(-1) == Rational(1));
    CHECK(prod.coeff(0) == Rational(3));

    CHECK((a * Rational(1, 2)).coeff(2) == Rational(3, 2));
    CHECK(a.shifted(3).coeff(3) == Rational(1));
    CHECK(a.truncated(1).top() == 1);
    CHECK(QSeries::constant(Rational(7), 4).coeff(4) == Rational(0));
    CHECK_THROWS(QSeries(0, {}));
}

TEST_CASE("Bernoulli numbers against Akiyama-Tanigawa") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (std::int64_t n = 2; n <= 40; n += 2) CHECK(bernoulli(n) == akiyama_tanigawa(n));
    CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
}

TEST_CASE("divisor sums") {
    CHECK(sigma_pow(1, 0) == Rational(-1, 24));
    CHECK(sigma_pow(1, 6) == Rational(12));
    CHECK(sigma_pow(-1, 4) == Rational(7, 4));
    CHECK(sigma_pow(3, 2) == Rational(9));
    CHECK_THROWS(sigma_pow(3, 0));
    CHECK_THROWS(sigma_pow(1, -1));
    for (std::int64_t n = 1; n <= 30; ++n) CHECK(sigma_pow(-1, n) == sigma(1, n) / Rational(n));
}

TEST_CASE("Eisenstein series") {
    check_series(eisenstein(2, 30), 0, naive_eisenstein(-24, 1, 30));
    check_series(eisenstein(4, 30), 0, naive_eisenstein(240, 3, 30));
    check_series(eisenstein(6, 30), 0, naive_eisenstein(-504, 5, 30));
    const auto e2 = eisenstein(2, 4);
    check_series(e2, 0, parse_all({"1", "-24", "-72", "-96", "-168"}));
    // Modular identities in weights 8 and 10.
    CHECK(eisenstein(4, 25) * eisenstein(4, 25) == eisenstein(8, 25));
    CHECK(eisenstein(4, 25) * eisenstein(6, 25) == eisenstein(10, 25));
    CHECK_THROWS(eisenstein(3, 5));
}

TEST_CASE("even eta quotient") {
    const auto eta = inv_even_eta_product(24);
    check_series(eta, 0, naive_eta(24));
    CHECK(eta.coeff(1) == Rational(0));
    CHECK(eta.coeff(2) == Rational(12));
    CHECK(eta.coeff(4) == Rational(90));
}

TEST_CASE("S polynomials") {
    Polynomial s1;
    s1.add_term({1}, Rational(1));
    CHECK(s_polynomial(1) == s1);
    Polynomial s2;
    s2.add_term({2}, Rational(1, 2));
    s2.add_term({0, 1}, Rational(1));
    CHECK(s_polynomial(2) == s2);
    // g S_g = sum_k k x_k S_{g-k}, checked at random rational points.
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 7);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> x;
        for (int k = 0; k < 7; ++k) x.emplace_back(num(rng), den(rng));
        for (std::int64_t g = 1; g <= 7; ++g) {
            Rational rhs;
            for (std::int64_t k = 1; k <= g; ++k) {
                const Rational lower = g - k == 0 ? Rational(1) : s_polynomial(g - k).evaluate(x);
                rhs += Rational(k) * x[static_cast<std::size_t>(k - 1)] * lower;
            }
            CHECK(Rational(g) * s_polynomial(g).evaluate(x) == rhs);
        }
    }
}

TEST_CASE("P series") {
    const auto p1 = p_series(1, 20);
    CHECK(p1.certified);
    const auto e2 = naive_eisenstein(-24, 1, 20);
    for (std::int64_t n = 0; n <= 20; ++n) CHECK(p1.series.coeff(n) == e2[static_cast<std::size_t>(n)] / Rational(12));
    check_series(p_series(1, 2).series, 0, parse_all({"1/12", "-2", "-6"}));

    const auto p2 = p_series(2, 20);
    CHECK(p2.certified);
    CHECK(p2.series.coeff(0) == Rational(1, 240));
    const auto e4 = naive_eisenstein(240, 3, 20);
    const auto sq = mul(e2, e2);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(p2.series.coeff(static_cast<std::int64_t>(n)) == (Rational(5) * sq[n] + e4[n]) / Rational(1440));

    CHECK_FALSE(p_series(3, 5).certified);
    CHECK(p_series(3, 5).series == p_series_substituted(3, 5));
    CHECK(p_series_substituted(1, 10) == p1.series.truncated(10));
}

TEST_CASE("printed P2 against the S2 substitution") {
    const auto subst = p_series_substituted(2, 12);
    const auto printed = p_series(2, 12).series;
    const auto e4 = eisenstein(4, 12);
    CHECK(subst - printed == e4 * Rational(1, 1440));
    const auto rep = p2_discrepancy_report(10);
    CHECK(rep.difference == e4.truncated(10) * Rational(1, 1440));
    CHECK(rep.mismatched_exponents.size() == 11);
    CHECK_FALSE(rep.lines().empty());
}

TEST_CASE("c_g coefficients") {
    const auto c1 = c_coefficients(1, 7);
    check_series(c1, -1, parse_all({"-1/6", "4", "10", "64", "157", "576", "4132/3", "3840", "17947/2"}));
    const auto c2 = c_coefficients(2, 6);
    check_series(c2, -1, parse_all({"-1/120", "0", "-61/10", "-32", "-651/4", "-576", "-5953/3", "-5760"}));
    CHECK(c_coefficient(c1, -2) == Rational(0));
    CHECK(c_coefficient(c1, 4) == Rational(576));

    // Independent assembly: -2 q^{-1} * eta quotient * P_g.
    const auto eta = naive_eta(21);
    const auto e2 = naive_eisenstein(-24, 1, 21);
    Coeffs p1(e2.size());
    for (std::size_t i = 0; i < e2.size(); ++i) p1[i] = e2[i] / Rational(12);
    const auto prod = mul(eta, p1);
    const auto wide = c_coefficients(1, 20);
    for (std::int64_t n = -1; n <= 20; ++n) CHECK(wide.coeff(n) == Rational(-2) * prod[static_cast<std::size_t>(n + 1)]);

    // The genus 1 / genus 2 relation at even index.
    const auto a = c_coefficients(1, 40), b = c_coefficients(2, 40);
    for (std::int64_t n = 0; n <= 40; n += 2) CHECK(b.coeff(n) == Rational(-n, 4) * a.coeff(n));
}

TEST_CASE("polylogarithm coefficients") {
    const auto li = polylog_series(-1, 6);
    check_series(li, 0, parse_all({"0", "1", "2", "3", "4", "5", "6"}));
    const auto li1 = polylog_series(1, 4);
    check_series(li1, 0, parse_all({"0", "1", "1/2", "1/3", "1/4"}));
    CHECK(polylog_series(3, 3).coeff(2) == Rational(1, 8));
}

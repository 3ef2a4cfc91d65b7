#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "enriques/qseries.hpp"
#include "enriques/rational.hpp"

// Quasimodular q-series feeding the heterotic genus expansion: Eisenstein
// series, the even eta quotient, the polynomials S_g and P_g, the
// coefficients c_g(n) and polylogarithm coefficients.

namespace enriques::qseries {

/// Bernoulli number B_{2n} (B_2 = 1/6). Throws std::invalid_argument for odd or
/// non-positive indices.
Rational bernoulli(std::int64_t index);

/// Divisor power sum sigma_n(k) = sum_{i | k} i^n. Only sigma_1(0) is
/// regularised (to -1/24); any other k = 0 request throws.
Rational sigma_pow(std::int64_t n, std::int64_t k);

/// E_{weight} = 1 - (2 weight / B_weight) sum_k sigma_{weight-1}(k) q^k through q^order.
QSeries eisenstein(std::int64_t weight, std::int64_t order = kDefaultOrder);

/// prod_{n >= 1} (1 - q^{2n})^{-12} through q^order.
QSeries inv_even_eta_product(std::int64_t order = kDefaultOrder);

/// Polynomial in x_1..x_g with rational coefficients. A monomial is keyed by
/// its exponent vector (exponent of x_k at position k - 1).
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    void add_term(Exponents exps, const Rational& coeff);
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational evaluate(const std::vector<Rational>& x) const;
    /// Substitutes x_k -> series[k - 1] and expands.
    QSeries substitute(const std::vector<QSeries>& series, std::int64_t order) const;

    std::string str() const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::map<Exponents, Rational> terms_;
};

/// Coefficient of z^g in exp(sum_{k >= 1} x_k z^k).
Polynomial s_polynomial(std::int64_t g);

/// P_g obtained by substituting x_k = |B_2k| / (2k)! * E_2k into S_g.
QSeries p_series_substituted(std::int64_t g, std::int64_t order = kDefaultOrder);

struct PSeries {
    QSeries series;
    /// True for g = 1, 2 which use the explicitly printed expressions; higher
    /// genera come from substitution only and are flagged uncertified.
    bool certified = false;
};

/// P_1 = E_2 / 12, P_2 = (5 E_2^2 + E_4) / 1440, higher g by substitution.
PSeries p_series(std::int64_t g, std::int64_t order = kDefaultOrder);

/// Laurent series sum_n c_g(n) q^n = -(2/q) prod (1-q^{2n})^{-12} P_g(q),
/// known through q^order (offset -1).
QSeries c_coefficients(std::int64_t g, std::int64_t order = kDefaultOrder);

/// c_g(n) from a series built by c_coefficients (zero below q^{-1}).
Rational c_coefficient(const QSeries& c_series, std::int64_t n);

/// Li_k(x) = sum_{n >= 1} x^n / n^k through x^order (coefficient of x^0 is 0).
QSeries polylog_series(std::int64_t k, std::int64_t order = kDefaultOrder);

/// Side-by-side comparison of the printed P_2 against the S_2 substitution.
struct P2DiscrepancyReport {
    std::int64_t order = 0;
    QSeries printed;
    QSeries substituted;
    QSeries difference;  // substituted - printed
    /// Exponents at which the two disagree.
    std::vector<std::int64_t> mismatched_exponents;
    std::vector<std::string> lines() const;
};

P2DiscrepancyReport p2_discrepancy_report(std::int64_t order = 10);

}  // namespace enriques::qseries

#include "enriques/modular.hpp"

#include <sstream>
#include <stdexcept>

namespace enriques::qseries {

namespace {

void check_order(std::int64_t order) {
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
}

void partitions(std::int64_t remaining, std::int64_t max_part, std::vector<unsigned>& mult,
                Polynomial& out) {
    if (remaining == 0) {
        Rational coeff(1);
        for (unsigned m : mult) coeff /= factorial(m);
        out.add_term(mult, coeff);
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++mult[static_cast<std::size_t>(part - 1)];
        partitions(remaining - part, part, mult, out);
        --mult[static_cast<std::size_t>(part - 1)];
    }
}

QSeries power(const QSeries& s, unsigned e, std::int64_t order) {
    QSeries r = QSeries::constant(Rational(1), order);
    for (unsigned i = 0; i < e; ++i) r = r * s;
    return r;
}

}  // namespace

Rational bernoulli(std::int64_t index) {
    if (index < 2 || index % 2 != 0) {
        throw std::invalid_argument("bernoulli expects an even index >= 2, got " + std::to_string(index));
    }
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, B_0 = 1.
    std::vector<Rational> b(static_cast<std::size_t>(index + 1));
    b[0] = Rational(1);
    for (std::int64_t m = 1; m <= index; ++m) {
        Rational acc;
        for (std::int64_t k = 0; k < m; ++k) acc.add_product(binomial(m + 1, k), b[static_cast<std::size_t>(k)]);
        b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    return b[static_cast<std::size_t>(index)];
}

Rational sigma_pow(std::int64_t n, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("sigma_pow needs k >= 0");
    if (k == 0) {
        if (n != 1) throw std::invalid_argument("unregularized: sigma_" + std::to_string(n) + "(0)");
        return -bernoulli(2) / Rational(4);
    }
    Rational s;
    for (std::int64_t i = 1; i * i <= k; ++i) {
        if (k % i != 0) continue;
        s += Rational::pow(Rational(i), n);
        if (i != k / i) s += Rational::pow(Rational(k / i), n);
    }
    return s;
}

QSeries eisenstein(std::int64_t weight, std::int64_t order) {
    check_order(order);
    if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 2");
    const Rational scale = Rational(-2 * weight) / bernoulli(weight);
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    c[0] = Rational(1);
    for (std::int64_t k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = scale * sigma_pow(weight - 1, k);
    return QSeries(0, std::move(c));
}

QSeries inv_even_eta_product(std::int64_t order) {
    check_order(order);
    std::vector<mpz_class> a(static_cast<std::size_t>(order + 1), 0);
    a[0] = 1;
    // Each factor 1/(1 - q^m) is a running sum with stride m.
    for (std::int64_t m = 2; m <= order; m += 2) {
        for (int rep = 0; rep < 12; ++rep) {
            for (std::int64_t i = m; i <= order; ++i) a[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i - m)];
        }
    }
    std::vector<Rational> c;
    c.reserve(a.size());
    for (auto& z : a) c.emplace_back(mpq_class(z));
    return QSeries(0, std::move(c));
}

void Polynomial::add_term(Exponents exps, const Rational& coeff) {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    Rational& slot = terms_[exps];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(exps);
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
    Rational total;
    for (const auto& [exps, coeff] : terms_) {
        Rational t = coeff;
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (k >= x.size()) throw std::invalid_argument("not enough values to evaluate polynomial");
            t *= Rational::pow(x[k], exps[k]);
        }
        total += t;
    }
    return total;
}

QSeries Polynomial::substitute(const std::vector<QSeries>& series, std::int64_t order) const {
    QSeries total = QSeries::constant(Rational(0), order);
    for (const auto& [exps, coeff] : terms_) {
        QSeries t = QSeries::constant(coeff, order);
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (k >= series.size()) throw std::invalid_argument("not enough series to substitute");
            t = t * power(series[k], exps[k], order);
        }
        total += t;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << coeff << ')';
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            os << "*x" << k + 1;
            if (exps[k] > 1) os << '^' << exps[k];
        }
    }
    return os.str();
}

Polynomial s_polynomial(std::int64_t g) {
    if (g < 0) throw std::invalid_argument("S_g needs g >= 0");
    Polynomial p;
    if (g == 0) {
        p.add_term({}, Rational(1));
        return p;
    }
    std::vector<unsigned> mult(static_cast<std::size_t>(g), 0);
    partitions(g, g, mult, p);
    return p;
}

QSeries p_series_substituted(std::int64_t g, std::int64_t order) {
    if (g < 1) throw std::invalid_argument("P_g needs g >= 1");
    check_order(order);
    std::vector<QSeries> x;
    for (std::int64_t k = 1; k <= g; ++k) {
        Rational weight = bernoulli(2 * k);
        if (weight.sign() < 0) weight = -weight;
        x.push_back(eisenstein(2 * k, order) * (weight / factorial(2 * k)));
    }
    return s_polynomial(g).substitute(x, order);
}

PSeries p_series(std::int64_t g, std::int64_t order) {
    if (g < 1) throw std::invalid_argument("P_g needs g >= 1");
    check_order(order);
    if (g == 1) return {eisenstein(2, order) * Rational(1, 12), true};
    if (g == 2) {
        const QSeries e2 = eisenstein(2, order);
        return {(e2 * e2 * Rational(5) + eisenstein(4, order)) * Rational(1, 1440), true};
    }
    return {p_series_substituted(g, order), false};
}

QSeries c_coefficients(std::int64_t g, std::int64_t order) {
    if (order < -1) throw std::invalid_argument("c_g series order must be >= -1");
    const std::int64_t inner = order + 1;
    QSeries s = inv_even_eta_product(inner) * p_series(g, inner).series;
    return (s * Rational(-2)).shifted(-1);
}

Rational c_coefficient(const QSeries& c_series, std::int64_t n) { return c_series.coeff(n); }

QSeries polylog_series(std::int64_t k, std::int64_t order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order + 1));
    for (std::int64_t n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = Rational::pow(Rational(n), -k);
    return QSeries(0, std::move(c));
}

std::vector<std::string> P2DiscrepancyReport::lines() const {
    std::vector<std::string> out;
    out.push_back("P2 printed (5 E2^2 + E4)/1440 vs S2 substitution (5 E2^2 + 2 E4)/1440, through q^" +
                  std::to_string(order));
    for (std::int64_t n = 0; n <= order; ++n) {
        std::ostringstream os;
        os << "q^" << n << ": printed " << printed.coeff(n) << ", substituted " << substituted.coeff(n)
           << ", difference " << difference.coeff(n);
        out.push_back(os.str());
    }
    std::ostringstream summary;
    summary << "mismatched exponents: " << mismatched_exponents.size() << " of " << order + 1;
    out.push_back(summary.str());
    return out;
}

P2DiscrepancyReport p2_discrepancy_report(std::int64_t order) {
    check_order(order);
    P2DiscrepancyReport r;
    r.order = order;
    r.printed = p_series(2, order).series;
    r.substituted = p_series_substituted(2, order);
    r.difference = r.substituted - r.printed;
    for (std::int64_t n = 0; n <= order; ++n) {
        if (!r.difference.coeff(n).is_zero()) r.mismatched_exponents.push_back(n);
    }
    return r;
}

}  // namespace enriques::qseries

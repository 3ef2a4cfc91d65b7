#include "enriques/relative_calculus.hpp"

#include <stdexcept>
#include <string>

#include "enriques/modular.hpp"

namespace enriques::relative {

Rational p1_relative_coeff(CoeffKind kind, std::int64_t d, std::int64_t r) {
    if (d < 1) throw std::invalid_argument("relative degree must be positive");
    if (kind == CoeffKind::full) return Rational(1) / factorial(2 * d);
    if (r < 1 || r > d - 1) {
        throw std::invalid_argument("mixed coefficient needs 1 <= r <= d-1 (d = " + std::to_string(d) +
                                    ", r = " + std::to_string(r) + ")");
    }
    return Rational(1) / (factorial(d + r) * factorial(d - r));
}

Rational lemma_d5_value(std::int64_t d, const Rational& base) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    const Rational f = factorial(d);
    return Rational(2 * d) / (f * f) * base;
}

std::vector<Rational> solve_I_recursion(std::int64_t d_max, const Rational& base) {
    if (d_max < 1) throw std::invalid_argument("d_max must be positive");
    std::vector<Rational> I;
    I.reserve(static_cast<std::size_t>(d_max));
    for (std::int64_t d = 1; d <= d_max; ++d) {
        Rational rest = lemma_d5_value(d, base);
        for (std::int64_t r = 1; r < d; ++r) {
            rest -= Rational(2 * r) * I[static_cast<std::size_t>(r - 1)] * p1_relative_coeff(CoeffKind::mixed, d, r);
        }
        I.push_back(rest * factorial(2 * d - 1));
    }
    return I;
}

Rational lemma_d6_d7_prefactor(Parity parity, std::int64_t m1, std::int64_t m2) {
    const std::int64_t lo = parity == Parity::odd ? 0 : 1;
    if (m1 < lo || m2 < lo) throw std::invalid_argument("part multiplicity out of range");
    const Rational f = factorial(m1) * factorial(m2);
    const Rational num = parity == Parity::odd ? Rational(2) : Rational(2 * m1 * m2);
    return num / (f * f);
}

Genus2Contributions genus2_contributions(gw::Engine& engine, const lattice::LatticeVector& beta, std::int64_t d) {
    if (!lattice::is_positive(beta)) throw std::invalid_argument("class must be positive, got " + beta.str());
    if (d < 1) throw std::invalid_argument("fiber degree must be positive");
    const Rational s = qseries::sigma_pow(1, d);
    Genus2Contributions c;
    c.type_i = Rational(4) * s * engine.enriques_genus1(beta) * Rational(lattice::square(beta));
    c.type_ii = Rational(16) * s * engine.decomposition_pair_sum(beta);
    return c;
}

Genus2Contributions genus2_contributions(const lattice::LatticeVector& beta, std::int64_t d) {
    return genus2_contributions(gw::default_engine(), beta, d);
}

}  // namespace enriques::relative

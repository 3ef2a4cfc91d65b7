#pragma once

#include <cstdint>
#include <vector>

#include "enriques/gw_engine.hpp"
#include "enriques/lattice.hpp"
#include "enriques/rational.hpp"

// Absolute/relative bookkeeping for the degeneration of Q along a K3 fiber:
// P^1 relative descendent coefficients, the triangular recursion for the
// relative evaluations I_d, and the two families of genus 2 contributions.

namespace enriques::relative {

enum class CoeffKind { full, mixed };

/// full:  <(2d) | tau_{2d-1}(p)> = 1/(2d)!  (r ignored)
/// mixed: <(2r),(1)^{d-r} | tau_{2d-1}(p)> = 1/((d+r)!(d-r)!), 1 <= r <= d-1
Rational p1_relative_coeff(CoeffKind kind, std::int64_t d, std::int64_t r = 0);

/// 2d/(d!)^2 * base, where base = <1>_{1,beta} <beta, pi_*(gamma)>.
Rational lemma_d5_value(std::int64_t d, const Rational& base);

/// Solves I_d/(2d-1)! + sum_{r<d} 2r I_r/((d+r)!(d-r)!) = lemma_d5_value(d, base)
/// for I_1..I_{d_max}.
std::vector<Rational> solve_I_recursion(std::int64_t d_max, const Rational& base);

enum class Parity { odd, even };

/// odd:  2/((m1!)^2 (m2!)^2)
/// even: 2 m1 m2/((m1!)^2 (m2!)^2), reading the undeclared m, n as m1, m2.
Rational lemma_d6_d7_prefactor(Parity parity, std::int64_t m1, std::int64_t m2);

struct Genus2Contributions {
    Rational type_i;   // 4 sigma_1(d) <1>_beta <beta,beta>
    Rational type_ii;  // 16 sigma_1(d) sum <1>_beta1 <1>_beta2 <beta1,beta2>
    Rational total() const { return type_i + type_ii; }
};

/// Requires beta positive and d >= 1.
Genus2Contributions genus2_contributions(gw::Engine& engine, const lattice::LatticeVector& beta, std::int64_t d);
Genus2Contributions genus2_contributions(const lattice::LatticeVector& beta, std::int64_t d);

}  // namespace enriques::relative

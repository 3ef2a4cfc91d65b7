#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "enriques/rational.hpp"

// Local theory of a Taubes curve C inside a surface S of general type, with
// descendents of the point class. Values are the disconnected brackets (no
// degree 0 components); no conversion to connected invariants is attempted.

namespace enriques::local {

struct DescendentSpec {
    std::vector<std::int64_t> alphas;  // exponents of tau_{alpha_i}(p)
    std::int64_t m = 0;                // tau(1)-type insertions
    std::int64_t g = 0;
    std::int64_t d = 0;
    std::int64_t g_C = 0;
    int sign = 1;                      // sigma(C)
};

/// Throws std::invalid_argument for a negative exponent or a sign other than +-1.
void validate(const DescendentSpec& spec);

/// g - 1 - d(g_C - 1) + m == sum alpha_i + sum alpha~_j.
bool dimension_check(const DescendentSpec& spec, const std::vector<std::int64_t>& alphas_tilde);

/// Degree 1: sign * prod alpha_i! / (2 alpha_i + 1)! * (-2)^{-alpha_i}.
Rational local_degree1(const std::vector<std::int64_t>& alphas, int sign);

/// Degree 2: sign * 2^{g_C + n - 1} * prod alpha_i! / (2 alpha_i + 1)! * (-2)^{alpha_i}.
Rational local_degree2(const std::vector<std::int64_t>& alphas, std::int64_t g_C, int sign);

/// d^n prod (K_S . D_i) times the local bracket.
Rational universality_map(const std::vector<Rational>& divisor_pairings, std::int64_t d, const Rational& local_value);

/// Sign of the Taubes curve, (-1)^chi(O_S).
int taubes_sign_from_chi(std::int64_t chi);

/// Double cover of P^2 branched along a smooth curve of degree 2n.
struct S2nNumerics {
    std::int64_t n = 0;
    std::int64_t K2 = 0;
    std::int64_t g_K = 0;
    std::int64_t chi = 0;
    int sign = 1;
};

/// K^2 = 2(n-3)^2, chi = 2 + n(n-3)/2, g_K = K^2 + 1. Only n >= 4 gives a
/// surface of general type; smaller n throws std::domain_error.
S2nNumerics s2n_numerics(std::int64_t n);

}  // namespace enriques::local

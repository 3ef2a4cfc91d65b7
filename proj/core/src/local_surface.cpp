#include "enriques/local_surface.hpp"

#include <numeric>
#include <string>

namespace enriques::local {

namespace {

void check_alphas(const std::vector<std::int64_t>& alphas) {
    for (const auto a : alphas) {
        if (a < 0) throw std::invalid_argument("descendent exponent must be non-negative, got " + std::to_string(a));
    }
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

Rational factor(std::int64_t a) { return factorial(a) / factorial(2 * a + 1); }

}  // namespace

void validate(const DescendentSpec& spec) {
    check_alphas(spec.alphas);
    check_sign(spec.sign);
}

bool dimension_check(const DescendentSpec& spec, const std::vector<std::int64_t>& alphas_tilde) {
    const std::int64_t lhs = spec.g - 1 - spec.d * (spec.g_C - 1) + spec.m;
    const std::int64_t rhs = std::accumulate(spec.alphas.begin(), spec.alphas.end(), std::int64_t{0}) +
                             std::accumulate(alphas_tilde.begin(), alphas_tilde.end(), std::int64_t{0});
    return lhs == rhs;
}

Rational local_degree1(const std::vector<std::int64_t>& alphas, int sign) {
    check_alphas(alphas);
    check_sign(sign);
    Rational v(sign);
    for (const auto a : alphas) v *= factor(a) * Rational::pow(Rational(-2), -a);
    return v;
}

Rational local_degree2(const std::vector<std::int64_t>& alphas, std::int64_t g_C, int sign) {
    check_alphas(alphas);
    check_sign(sign);
    if (g_C < 0) throw std::invalid_argument("curve genus must be non-negative");
    const auto n = static_cast<std::int64_t>(alphas.size());
    Rational v = Rational(sign) * Rational::pow(Rational(2), g_C + n - 1);
    for (const auto a : alphas) v *= factor(a) * Rational::pow(Rational(-2), a);
    return v;
}

Rational universality_map(const std::vector<Rational>& divisor_pairings, std::int64_t d, const Rational& local_value) {
    if (d <= 0) throw std::invalid_argument("degree must be positive");
    Rational v = local_value;
    for (const auto& k : divisor_pairings) v *= Rational(d) * k;
    return v;
}

int taubes_sign_from_chi(std::int64_t chi) { return chi % 2 == 0 ? 1 : -1; }

S2nNumerics s2n_numerics(std::int64_t n) {
    if (n < 4) throw std::domain_error("S_2n is not of general type for n < 4 (n = " + std::to_string(n) + ")");
    S2nNumerics s;
    s.n = n;
    s.K2 = 2 * (n - 3) * (n - 3);
    s.chi = 2 + n * (n - 3) / 2;
    s.g_K = s.K2 + 1;
    s.sign = taubes_sign_from_chi(s.chi);
    return s;
}

}  // namespace enriques::local

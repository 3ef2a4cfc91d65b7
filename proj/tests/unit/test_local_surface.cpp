#include <doctest.h>

#include <algorithm>
#include <random>

#include <enriques/local_surface.hpp>

using namespace enriques;
using namespace enriques::local;

TEST_CASE("dimension constraint") {
    CHECK(dimension_check({{}, 0, 1, 1, 1, 1}, {}));
    CHECK(dimension_check({{1}, 0, 2, 1, 1, 1}, {}));
    CHECK_FALSE(dimension_check({{1}, 0, 1, 1, 1, 1}, {}));
    CHECK(dimension_check({{1}, 1, 2, 2, 2, 1}, {}) == (2 - 1 - 2 + 1 == 1));
    CHECK(dimension_check({{0}, 0, 3, 1, 1, 1}, {2}));
    std::vector<std::int64_t> alphas{3, 0, 2, 1};
    DescendentSpec spec{alphas, 2, 7, 1, 1, 1};
    const bool base = dimension_check(spec, {1});
    std::sort(alphas.begin(), alphas.end());
    do {
        spec.alphas = alphas;
        CHECK(dimension_check(spec, {1}) == base);
    } while (std::next_permutation(alphas.begin(), alphas.end()));
}

TEST_CASE("degree 1 local values") {
    CHECK(local_degree1({}, 1) == Rational(1));
    CHECK(local_degree1({1}, 1) == Rational(-1, 12));
    CHECK(local_degree1({2}, -1) == Rational(-1, 240));
    CHECK(local_degree1({0, 0, 0}, -1) == Rational(-1));
    CHECK(local_degree1({1, 2}, 1) == local_degree1({1}, 1) * local_degree1({2}, 1));
    CHECK_THROWS(local_degree1({-1}, 1));
    CHECK_THROWS(local_degree1({}, 0));
}

TEST_CASE("degree 2 local values") {
    CHECK(local_degree2({}, 2, 1) == Rational(2));
    CHECK(local_degree2({0}, 1, 1) == Rational(2));
    CHECK(local_degree2({1}, 1, -1) == Rational(2, 3));
    CHECK(local_degree2({}, 2, -1) == Rational(-2));
    CHECK_THROWS(local_degree2({}, -1, 1));
    CHECK_THROWS(local_degree2({}, 1, 2));
}

TEST_CASE("sign parity") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::int64_t> a(0, 6), n(0, 4), gc(0, 5);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::int64_t> alphas(static_cast<std::size_t>(n(rng)));
        for (auto& x : alphas) x = a(rng);
        const std::int64_t g = gc(rng);
        CHECK(local_degree1(alphas, -1) == -local_degree1(alphas, 1));
        CHECK(local_degree2(alphas, g, -1) == -local_degree2(alphas, g, 1));
        std::vector<std::int64_t> zeros(alphas.size(), 0);
        CHECK(local_degree1(zeros, 1) == Rational(1));
    }
}

TEST_CASE("universality map") {
    CHECK(universality_map({}, 5, Rational(7, 3)) == Rational(7, 3));
    CHECK(universality_map({Rational(3)}, 2, Rational(1)) == Rational(6));
    CHECK(universality_map({Rational(1), Rational(1)}, 1, Rational(-1, 12)) == Rational(-1, 12));
    CHECK(universality_map({Rational(2), Rational(5)}, 3, Rational(1)) == Rational(90));
    CHECK_THROWS(universality_map({}, 0, Rational(1)));
}

TEST_CASE("Taubes sign") {
    CHECK(taubes_sign_from_chi(4) == 1);
    CHECK(taubes_sign_from_chi(7) == -1);
    CHECK(taubes_sign_from_chi(0) == 1);
    CHECK(taubes_sign_from_chi(-3) == -1);
    for (std::int64_t x = -5; x <= 5; ++x)
        for (std::int64_t y = -5; y <= 5; ++y)
            CHECK(taubes_sign_from_chi(x) * taubes_sign_from_chi(y) == taubes_sign_from_chi(x + y));
}

TEST_CASE("double planes of general type") {
    const auto s4 = s2n_numerics(4);
    CHECK(s4.K2 == 2);
    CHECK(s4.g_K == 3);
    CHECK(s4.chi == 4);
    CHECK(s4.sign == 1);
    const auto s5 = s2n_numerics(5);
    CHECK(s5.K2 == 8);
    CHECK(s5.g_K == 9);
    CHECK(s5.chi == 7);
    CHECK(s5.sign == -1);
    const auto s6 = s2n_numerics(6);
    CHECK(s6.K2 == 18);
    CHECK(s6.chi == 11);
    CHECK(s6.sign == -1);
    CHECK_THROWS_AS(s2n_numerics(3), std::domain_error);
    for (std::int64_t n = 4; n <= 30; ++n) {
        const auto s = s2n_numerics(n);
        // Branch curve B of degree 2n and L = O(n): K = pi^*(K_P2 + L),
        // chi = 2 chi(O_P2) + L(L+K_P2)/2, e = 2 e(P2) - e(B), and Noether.
        const std::int64_t l = n, k = -3;
        CHECK(s.K2 == 2 * (k + l) * (k + l));
        CHECK(2 * s.chi == 4 + l * (l + k));
        const std::int64_t genus_b = (2 * n - 1) * (2 * n - 2) / 2;
        const std::int64_t euler = 2 * 3 - (2 - 2 * genus_b);
        CHECK(12 * s.chi == s.K2 + euler);
        CHECK(s.g_K == s.K2 + 1);
    }
}

#include <doctest.h>

#include <random>

#include <enriques/gw_engine.hpp>
#include <enriques/relative_calculus.hpp>

using namespace enriques;
using namespace enriques::relative;
using lattice::LatticeVector;

TEST_CASE("P1 relative coefficients") {
    CHECK(p1_relative_coeff(CoeffKind::full, 1) == Rational(1, 2));
    CHECK(p1_relative_coeff(CoeffKind::full, 3) == Rational(1, 720));
    CHECK(p1_relative_coeff(CoeffKind::mixed, 2, 1) == Rational(1, 6));
    CHECK(p1_relative_coeff(CoeffKind::mixed, 5, 2) == Rational(1, 5040 * 6));
    CHECK_THROWS(p1_relative_coeff(CoeffKind::mixed, 2, 2));
    CHECK_THROWS(p1_relative_coeff(CoeffKind::mixed, 2, 0));
    CHECK_THROWS(p1_relative_coeff(CoeffKind::full, 0));
    // At r = d the mixed closed form reads 1/((2d)! 0!).
    for (std::int64_t d = 1; d <= 10; ++d) {
        CHECK(p1_relative_coeff(CoeffKind::full, d) == Rational(1) / (factorial(2 * d) * factorial(0)));
    }
}

TEST_CASE("degree d input values") {
    CHECK(lemma_d5_value(1, Rational(1)) == Rational(2));
    CHECK(lemma_d5_value(2, Rational(1)) == Rational(1));
    CHECK(lemma_d5_value(3, Rational(1)) == Rational(1, 6));
    CHECK(lemma_d5_value(2, Rational(-3, 7)) == Rational(-3, 7));
    CHECK_THROWS(lemma_d5_value(0, Rational(1)));
}

TEST_CASE("relative recursion") {
    CHECK(solve_I_recursion(1, Rational(1)) == std::vector<Rational>{Rational(2)});
    CHECK(solve_I_recursion(2, Rational(1)) == std::vector<Rational>{Rational(2), Rational(2)});
    const Rational x(17, 5);
    for (const auto& v : solve_I_recursion(5, x)) CHECK(v == Rational(2) * x);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> num(-500, 500), den(1, 300);
    for (int t = 0; t < 10; ++t) {
        const Rational base(num(rng), den(rng));
        const auto I = solve_I_recursion(30, base);
        REQUIRE(I.size() == 30);
        for (const auto& v : I) CHECK(v == Rational(2) * base);
    }
    CHECK_THROWS(solve_I_recursion(0, Rational(1)));
}

TEST_CASE("two-part prefactors") {
    CHECK(lemma_d6_d7_prefactor(Parity::odd, 0, 0) == Rational(2));
    CHECK(lemma_d6_d7_prefactor(Parity::odd, 1, 1) == Rational(2));
    CHECK(lemma_d6_d7_prefactor(Parity::odd, 2, 1) == Rational(1, 2));
    CHECK(lemma_d6_d7_prefactor(Parity::even, 1, 1) == Rational(2));
    CHECK(lemma_d6_d7_prefactor(Parity::even, 2, 3) == Rational(12, 4 * 36));
    CHECK_THROWS(lemma_d6_d7_prefactor(Parity::even, 0, 1));
    CHECK_THROWS(lemma_d6_d7_prefactor(Parity::odd, -1, 1));
}

TEST_CASE("genus 2 contributions") {
    gw::Engine engine;
    const LatticeVector v1 = LatticeVector::basis(1), v2 = LatticeVector::basis(2);
    const auto c = genus2_contributions(engine, v1 + v2, 1);
    CHECK(c.type_i == Rational(256));
    CHECK(c.type_ii == Rational(128));
    CHECK(c.total() == Rational(384));
    const auto c2 = genus2_contributions(engine, v1 + v2, 2);
    CHECK(c2.type_i == Rational(3 * 256));
    CHECK(c2.type_ii == Rational(3 * 128));
    const auto iso = genus2_contributions(engine, 3 * v1, 4);
    CHECK(iso.type_i == Rational(0));
    CHECK(iso.type_ii == Rational(0));
    for (const auto& beta : lattice::short_vectors(2)) {
        for (std::int64_t d = 1; d <= 6; ++d) {
            const LatticeVector b(2, 2, beta);
            CHECK(genus2_contributions(engine, b, d).total() == engine.n_invariant(2, {b, d}).value);
        }
    }
    CHECK_THROWS(genus2_contributions(engine, -v1, 1));
    CHECK_THROWS(genus2_contributions(engine, v1, 0));
}

#include <doctest.h>

#include <json.hpp>

#include <enriques/km_model.hpp>
#include <enriques/modular.hpp>

using namespace enriques;
using namespace enriques::km;
using lattice::LatticeVector;

namespace {

const LatticeVector v1 = LatticeVector::basis(1);
const LatticeVector v2 = LatticeVector::basis(2);

// Reads the coefficient of e^{-<beta,v>} off the polylogarithm expansions:
// beta = n gamma contributes c(idx gamma) 2^{3-2g} [x^n] Li_{3-2g}(x) - c(idx gamma) [x^n] Li_{3-2g}(x^2).
Rational expand_prediction(int g, const LatticeVector& beta, IndexConvention conv) {
    const std::int64_t div = lattice::divisibility(beta);
    const auto c = qseries::c_coefficients(g, lattice::square(beta) + 2);
    const auto li = qseries::polylog_series(3 - 2 * g, div);
    Rational total;
    for (std::int64_t n = 1; n <= div; ++n) {
        if (div % n != 0) continue;
        const LatticeVector gamma = beta.divided_by(n);
        const std::int64_t sq = lattice::square(gamma);
        const Rational cg = c.coeff(conv == IndexConvention::full ? sq : sq / 2);
        total += cg * Rational::pow(Rational(2), 3 - 2 * g) * li.coeff(n);
        if (n % 2 == 0) total -= cg * li.coeff(n / 2);
    }
    return total;
}

}  // namespace

TEST_CASE("predictions in both conventions") {
    CHECK(km_fiber_prediction(1, v1, IndexConvention::full) == Rational(8));
    CHECK(km_fiber_prediction(1, 2 * v1, IndexConvention::full) == Rational(8));
    CHECK(km_fiber_prediction(1, v1 + v2, IndexConvention::full) == Rational(128));
    CHECK(km_fiber_prediction(1, 2 * v1 + v2, IndexConvention::full) == Rational(1152));
    CHECK(km_fiber_prediction(2, v1 + v2, IndexConvention::full) == Rational(-16));
    CHECK(km_fiber_prediction(2, v1 + v2, IndexConvention::half) == Rational(-61, 20));
    CHECK(km_fiber_prediction(1, v1 + v2, IndexConvention::half) == Rational(20));
    CHECK(km_fiber_prediction(2, v1, IndexConvention::full) == Rational(0));
    CHECK(km_fiber_prediction(2, v1, IndexConvention::half) == Rational(0));
}

TEST_CASE("predictions match the polylogarithm expansion") {
    for (const auto& beta : {v1, 2 * v1, 3 * v1, 4 * v1, 6 * v1, v1 + v2, 2 * v1 + 2 * v2, 3 * v1 + v2, 2 * v1 + 3 * v2,
                             LatticeVector::parse("2,2,0,0,0,0,0,0,0,2")}) {
        for (int g : {1, 2}) {
            for (auto conv : {IndexConvention::full, IndexConvention::half}) {
                CHECK(km_fiber_prediction(g, beta, conv) == expand_prediction(g, beta, conv));
            }
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(km_fiber_prediction(3, v1, IndexConvention::full), std::invalid_argument);
    CHECK_THROWS_AS(km_fiber_prediction(1, -v1, IndexConvention::full), std::invalid_argument);
    CHECK_THROWS_AS(km_fiber_prediction(1, 3 * v1 + 3 * v2, IndexConvention::full, 4), std::out_of_range);
    CHECK(km_fiber_prediction(1, 3 * v1 + 3 * v2, IndexConvention::full, 18) ==
          km_fiber_prediction(1, 3 * v1 + 3 * v2, IndexConvention::full));
    CHECK(parse_convention("full") == IndexConvention::full);
    CHECK(parse_convention("half") == IndexConvention::half);
    CHECK_THROWS_AS(parse_convention("third"), std::invalid_argument);
    CHECK(default_order(v1 + v2) == 4);
    CHECK_THROWS(km_f56_check(v1, IndexConvention::full));
}

TEST_CASE("genus 1 / genus 2 relation") {
    for (const auto& beta : {v1 + v2, 2 * v1 + v2, 2 * v1 + 2 * v2, 3 * v1 + 2 * v2, LatticeVector::parse("3,3,1,0,0,0,0,0,0,0")}) {
        const auto full = km_f56_check(beta, IndexConvention::full);
        CHECK(full.holds);
        CHECK(full.genus2 == full.rhs);
    }
    const auto half = km_f56_check(v1 + v2, IndexConvention::half);
    CHECK_FALSE(half.holds);
    CHECK(half.genus2 == Rational(-61, 20));
    CHECK(half.rhs == Rational(-5, 2));
    CHECK(half.str().find("FAILS") != std::string::npos);
}

TEST_CASE("comparison against the engine") {
    gw::Engine engine;
    const auto r2 = compare_engine_vs_km(engine, 2, v1 + v2);
    CHECK(r2.engine_value == Rational(-16));
    CHECK(r2.match_full);
    CHECK_FALSE(r2.match_half);
    const auto j = nlohmann::json::parse(r2.json());
    CHECK(j["class"] == "1,1,0,0,0,0,0,0,0,0");
    CHECK(j["genus"] == 2);
    CHECK(j["engine_value"] == "-16");
    CHECK(j["prediction_half"] == "-61/20");
    CHECK(j["verdicts"]["full"] == "match");
    CHECK(j["verdicts"]["half"] == "mismatch");
    const auto r1 = compare_engine_vs_km(engine, 1, 2 * v1 + v2);
    CHECK(r1.match_full);
    CHECK_THROWS(compare_engine_vs_km(engine, 0, v1));
    CHECK_THROWS(compare_engine_vs_km(engine, 1, -v1));
}

#include "enriques/km_model.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "enriques/modular.hpp"

namespace enriques::km {

namespace {

// c_g series are reused across many classes; building one is O(T^2) exact
// products, so keep the largest order requested per genus.
qseries::QSeries c_series(int genus, std::int64_t order) {
    static std::mutex mutex;
    static std::map<int, qseries::QSeries> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(genus);
    if (it == cache.end() || it->second.top() < order) {
        it = cache.insert_or_assign(genus, qseries::c_coefficients(genus, order)).first;
    }
    return it->second.truncated(order);
}

std::int64_t index_of(const LatticeVector& beta, IndexConvention conv) {
    const std::int64_t sq = lattice::square(beta);
    return conv == IndexConvention::full ? sq : sq / 2;
}

}  // namespace

std::string_view to_string(IndexConvention conv) { return conv == IndexConvention::full ? "full" : "half"; }

IndexConvention parse_convention(std::string_view text) {
    if (text == "full") return IndexConvention::full;
    if (text == "half") return IndexConvention::half;
    throw std::invalid_argument("unknown index convention '" + std::string(text) + "' (expected full or half)");
}

std::int64_t default_order(const LatticeVector& beta) { return std::max<std::int64_t>(lattice::square(beta), 0) + 2; }

Rational km_fiber_prediction(int genus, const LatticeVector& beta, IndexConvention conv, std::int64_t order) {
    if (genus != 1 && genus != 2) throw std::invalid_argument("heterotic prediction is certified only for g = 1, 2");
    if (!lattice::is_positive(beta)) throw std::invalid_argument("prediction requires a positive class, got " + beta.str());
    if (index_of(beta, conv) > order) {
        throw std::out_of_range("order " + std::to_string(order) + " too small for class " + beta.str());
    }
    const qseries::QSeries c = c_series(genus, order);
    const std::int64_t k = 3 - 2 * genus;
    const Rational lead = Rational::pow(Rational(2), k);
    const std::int64_t div = lattice::divisibility(beta);

    Rational total;
    for (std::int64_t n = 1; n <= div; ++n) {
        if (div % n != 0) continue;
        const LatticeVector base = beta.divided_by(n);
        const Rational weight = Rational::pow(Rational(n), -k);
        total += c.coeff(index_of(base, conv)) * lead * weight;
        if (n % 2 == 0) {
            // n = 2m: the Li(e^{-2<beta',v>}) term of beta' = beta/n at multiplicity m.
            total -= c.coeff(index_of(base, conv)) * Rational::pow(Rational(n / 2), -k);
        }
    }
    return total;
}

Rational km_fiber_prediction(int genus, const LatticeVector& beta, IndexConvention conv) {
    return km_fiber_prediction(genus, beta, conv, default_order(beta));
}

std::string F56Report::str() const {
    std::ostringstream os;
    os << "class " << beta << " [" << to_string(convention) << "]: F2 coefficient " << genus2
       << ", (3/2) sigma_1(0) F1 <b,b> = " << rhs << (holds ? "  holds" : "  FAILS");
    return os.str();
}

F56Report km_f56_check(const LatticeVector& beta, IndexConvention conv) {
    if (!lattice::is_positive(beta) || lattice::square(beta) <= 0) {
        throw std::invalid_argument("f56 check needs a positive class of positive square, got " + beta.str());
    }
    F56Report r;
    r.beta = beta;
    r.convention = conv;
    r.genus2 = km_fiber_prediction(2, beta, conv);
    r.genus1 = km_fiber_prediction(1, beta, conv);
    r.rhs = Rational(3, 2) * qseries::sigma_pow(1, 0) * r.genus1 * Rational(lattice::square(beta));
    r.holds = r.genus2 == r.rhs;
    return r;
}

std::string ComparisonReport::json() const {
    nlohmann::ordered_json j;
    j["class"] = beta.str();
    j["genus"] = genus;
    j["engine_value"] = engine_value.str();
    j["prediction_full"] = prediction_full.str();
    j["prediction_half"] = prediction_half.str();
    j["verdicts"] = {{"full", match_full ? "match" : "mismatch"}, {"half", match_half ? "match" : "mismatch"}};
    return j.dump();
}

ComparisonReport compare_engine_vs_km(gw::Engine& engine, int genus, const LatticeVector& beta) {
    if (genus != 1 && genus != 2) throw std::invalid_argument("comparison supports g = 1, 2");
    if (!lattice::is_positive(beta)) throw std::invalid_argument("comparison requires a positive class");
    ComparisonReport r;
    r.genus = genus;
    r.beta = beta;
    r.engine_value = genus == 1 ? engine.n1_fiber(beta) : engine.n2_fiber(beta);
    r.prediction_full = km_fiber_prediction(genus, beta, IndexConvention::full);
    r.prediction_half = km_fiber_prediction(genus, beta, IndexConvention::half);
    r.match_full = r.engine_value == r.prediction_full;
    r.match_half = r.engine_value == r.prediction_half;
    return r;
}

ComparisonReport compare_engine_vs_km(int genus, const LatticeVector& beta) {
    return compare_engine_vs_km(gw::default_engine(), genus, beta);
}

}  // namespace enriques::km

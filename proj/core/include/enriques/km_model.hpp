#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "enriques/gw_engine.hpp"
#include "enriques/lattice.hpp"
#include "enriques/qseries.hpp"
#include "enriques/rational.hpp"

// Heterotic prediction for the fiber class potential
//   F_g = sum_{beta > 0} c_g(idx(beta)) (2^{3-2g} Li_{3-2g}(e^{-<beta,v>}) - Li_{3-2g}(e^{-2<beta,v>})),
// read off class by class. The argument of c_g is not pinned down by the
// formula (c_g has a q^{-1} tail while the lattice is even), so both readings
// are exposed: idx = <beta,beta> ("full") and idx = <beta,beta>/2 ("half").

namespace enriques::km {

using lattice::LatticeVector;

enum class IndexConvention { full, half };

std::string_view to_string(IndexConvention conv);
IndexConvention parse_convention(std::string_view text);

/// Order T used for c_g when none is given: square(beta) + 2.
std::int64_t default_order(const LatticeVector& beta);

/// Coefficient of e^{-<beta,v>} in F_g:
///   sum_{n | beta} c_g(idx(beta/n)) 2^{3-2g} n^{2g-3} - sum_{2n | beta} c_g(idx(beta/2n)) n^{2g-3}.
/// Throws std::invalid_argument for non-positive beta or g outside {1, 2}.
Rational km_fiber_prediction(int genus, const LatticeVector& beta, IndexConvention conv, std::int64_t order);
Rational km_fiber_prediction(int genus, const LatticeVector& beta, IndexConvention conv);

struct F56Report {
    LatticeVector beta;
    IndexConvention convention = IndexConvention::full;
    Rational genus2;             // prediction for g = 2
    Rational genus1;             // prediction for g = 1
    Rational rhs;                // (3/2) sigma_1(0) * genus1 * <beta,beta>
    bool holds = false;
    std::string str() const;
};

/// Checks prediction(2) == (3/2) sigma_1(0) prediction(1) <beta,beta>.
/// Requires beta positive with <beta,beta> > 0.
F56Report km_f56_check(const LatticeVector& beta, IndexConvention conv);

struct ComparisonReport {
    int genus = 0;
    LatticeVector beta;
    Rational engine_value;
    Rational prediction_full;
    Rational prediction_half;
    bool match_full = false;
    bool match_half = false;
    /// {class, genus, engine_value, prediction_full, prediction_half, verdicts}
    std::string json() const;
};

/// Engine fiber invariant (N_1 or N_2 at d = 0) next to both predictions.
ComparisonReport compare_engine_vs_km(gw::Engine& engine, int genus, const LatticeVector& beta);
ComparisonReport compare_engine_vs_km(int genus, const LatticeVector& beta);

}  // namespace enriques::km

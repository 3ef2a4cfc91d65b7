#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <enriques/lattice.hpp>

// Acceptance suite shared by `enriques selfcheck` and the acceptance test.

namespace enriques::tools {

using lattice::LatticeVector;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool correct = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string summary;
    std::vector<std::string> details;
    bool passed() const { return correct && seconds < limit_seconds; }
};

/// Positive classes with 0 <= b1, b2 <= max_b and E8 part in short_vectors(max_e8_norm),
/// in lexicographic order.
std::vector<LatticeVector> positive_box(std::int64_t max_b, std::int64_t max_e8_norm);

/// Brute-force decomposition oracle: scans 0 <= b2' <= b2, 0 <= b1' <= b1 and,
/// for the E8 part, a precomputed short-vector list around whichever of 0 or e
/// carries the smaller norm budget, then filters by the defining conditions.
/// `budget` caps the smaller norm budget of any split it will be asked about;
/// classes needing more throw std::out_of_range. For b1, b2 <= 4 a budget of 8
/// suffices whatever the E8 part.
class BoxOracle {
public:
    explicit BoxOracle(std::int64_t budget = 8);

    void visit(const LatticeVector& beta, const lattice::DecompositionVisitor& visit) const;
    std::vector<lattice::Decomposition> list(const LatticeVector& beta) const;

private:
    std::int64_t budget_;
    std::vector<lattice::E8Vector> vectors_;
    std::vector<std::int64_t> norms_;
};

/// Runs the selected criteria (all when `only` is empty), writing one line per
/// criterion to `out` as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::set<int>& only = {}, bool verbose = false);

}  // namespace enriques::tools

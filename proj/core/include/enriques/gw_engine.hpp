#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "enriques/lattice.hpp"
#include "enriques/qseries.hpp"
#include "enriques/rational.hpp"

// Gromov-Witten invariants of the Enriques surface X and of the Enriques
// Calabi-Yau threefold Q = (K3 x E)/Z2 in genus <= 2.
//
// Genus 1 invariants <1>_{1,beta} of X follow from the isotropic base cases
// and the quadratic recursion
//   <1>_beta <beta,beta> = 8 sum_{beta1 + beta2 = beta} <1>_beta1 <1>_beta2 <beta1,beta2>
// over ordered decompositions into positive classes of non-negative square.
// The recursion itself rests on the (conjectural) Virasoro constraints for X;
// the engine takes it as the defining relation.
//
// All classes live in the torsion-free quotient, and values already include
// the sum over the two torsion lifts.

namespace enriques::gw {

using lattice::LatticeVector;

/// Class (beta, d) in H_2(Q)' = H_2(X)' + Z[E].
struct CurveClassQ {
    LatticeVector beta;
    std::int64_t d = 0;
    friend bool operator==(const CurveClassQ&, const CurveClassQ&) = default;
};

enum class Rule { vanishing, isotropic_base, recursion, fiber, theorem3, elliptic };

std::string_view to_string(Rule rule);

struct InvariantRecord {
    int genus = 0;
    CurveClassQ cls;
    Rational value;
    Rule rule = Rule::vanishing;
};

/// (beta, d) = (0, 0) requested in genus 0 or 1.
class UnstableClassError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedGenusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Streams the ordered decompositions of a positive class. The output must be
/// closed under swapping the two components.
using DecompositionSource = std::function<void(const LatticeVector&, const lattice::DecompositionVisitor&)>;

/// Adapts a list-returning enumerator (such as a brute-force oracle).
DecompositionSource from_list(std::function<std::vector<lattice::Decomposition>(const LatticeVector&)> enumerate);

struct EngineOptions {
    DecompositionSource decompositions = lattice::for_each_decomposition;
    bool memoize = true;
    /// Key the cache on the W(E8)-orbit representative of each class. Values
    /// are Weyl invariant, so this only changes how often work is shared.
    bool orbit_cache = true;
};

/// <1>_{1, nF} for F primitive positive isotropic:
/// 2 sigma_{-1}(n) for n odd, 2 sigma_{-1}(n) - sigma_{-1}(n/2) for n even.
Rational isotropic_genus1(std::int64_t n);

/// Memoising evaluator. Thread safe: concurrent callers share one cache
/// guarded by a reader/writer lock, and results do not depend on scheduling.
class Engine {
public:
    Engine() : Engine(EngineOptions{}) {}
    explicit Engine(EngineOptions options);

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    /// <1>^X_{1,beta}. Throws UnstableClassError for beta = 0.
    Rational enriques_genus1(const LatticeVector& beta);

    /// sum over decompositions of <1>_beta1 <1>_beta2 <beta1, beta2>; beta positive.
    Rational decomposition_pair_sum(const LatticeVector& beta);

    /// N_{1,(beta,0)} = 4 <1>_{1,beta}.
    Rational n1_fiber(const LatticeVector& beta);

    /// <lambda_1>^X_{2,beta} = <1>_{1,beta} <beta,beta> / 16.
    Rational enriques_genus2_lambda1(const LatticeVector& beta);

    /// N_{2,(beta,0)} = -N_{1,(beta,0)} <beta,beta> / 16.
    Rational n2_fiber(const LatticeVector& beta);

    /// N_{1,(beta,0)} <beta,beta> + sum N_{1,(beta1,0)} N_{1,(beta2,0)} <beta1,beta2>,
    /// the bracket multiplying sigma_1(d) in the genus 2 formula for d > 0.
    Rational theorem3_bracket(const LatticeVector& beta);

    /// N_{g,(beta,d)} for g in {0, 1, 2}.
    InvariantRecord n_invariant(int genus, const CurveClassQ& cls);

    std::size_t cache_size() const;

private:
    struct Entry {
        std::optional<Rational> genus1;
        std::optional<Rational> pair_sum;
        std::optional<Rational> bracket;
    };

    template <typename Compute>
    Rational cached(const LatticeVector& beta, std::optional<Rational> Entry::*slot, Compute&& compute);

    Rational compute_genus1(const LatticeVector& beta);
    Rational compute_pair_sum(const LatticeVector& beta);
    Rational compute_bracket(const LatticeVector& beta);

    EngineOptions options_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<LatticeVector, Entry, lattice::LatticeVectorHash> cache_;
};

/// Process-wide engine used by the free functions below.
Engine& default_engine();

Rational enriques_genus1(const LatticeVector& beta);
Rational n1_fiber(const LatticeVector& beta);
Rational enriques_genus2_lambda1(const LatticeVector& beta);
Rational n2_fiber(const LatticeVector& beta);
InvariantRecord n_invariant(int genus, const CurveClassQ& cls);

/// sum_d N_{2,(beta,d)} q^d against E_2(q) N_{2,(beta,0)}, coefficient by coefficient.
struct CorollaryReport {
    LatticeVector beta;
    std::int64_t order = 0;
    qseries::QSeries lhs;
    qseries::QSeries rhs;
    std::vector<bool> equal;
    bool all_equal = false;
};

CorollaryReport e2_corollary_check(Engine& engine, const LatticeVector& beta, std::int64_t order);
CorollaryReport e2_corollary_check(const LatticeVector& beta, std::int64_t order);

}  // namespace enriques::gw

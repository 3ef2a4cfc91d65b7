#include "enriques/gw_engine.hpp"

#include <mutex>

#include "enriques/modular.hpp"

namespace enriques::gw {

using lattice::divisibility;
using lattice::is_positive;
using lattice::pair;
using lattice::square;

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::vanishing: return "vanishing";
        case Rule::isotropic_base: return "isotropic_base";
        case Rule::recursion: return "recursion";
        case Rule::fiber: return "fiber";
        case Rule::theorem3: return "theorem3";
        case Rule::elliptic: return "elliptic";
    }
    return "unknown";
}

Rational isotropic_genus1(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("isotropic multiple must be positive");
    Rational v = Rational(2) * qseries::sigma_pow(-1, n);
    if (n % 2 == 0) v -= qseries::sigma_pow(-1, n / 2);
    return v;
}

DecompositionSource from_list(std::function<std::vector<lattice::Decomposition>(const LatticeVector&)> enumerate) {
    return [enumerate = std::move(enumerate)](const LatticeVector& beta, const lattice::DecompositionVisitor& visit) {
        for (const auto& [a, b] : enumerate(beta)) visit(a, b);
    };
}

Engine::Engine(EngineOptions options) : options_(std::move(options)) {}

template <typename Compute>
Rational Engine::cached(const LatticeVector& beta, std::optional<Rational> Entry::*slot, Compute&& compute) {
    if (!options_.memoize) return compute();
    const LatticeVector key = options_.orbit_cache ? lattice::orbit_representative(beta) : beta;
    {
        std::shared_lock lock(mutex_);
        const auto it = cache_.find(key);
        if (it != cache_.end() && (it->second.*slot).has_value()) return *(it->second.*slot);
    }
    Rational value = compute();
    std::unique_lock lock(mutex_);
    auto& stored = cache_[key].*slot;
    if (!stored.has_value()) stored = std::move(value);
    return *stored;
}

Rational Engine::enriques_genus1(const LatticeVector& beta) {
    if (beta.is_zero()) throw UnstableClassError("unstable class: genus 1 invariant of the zero class");
    if (!is_positive(beta) || square(beta) < 0) return Rational(0);
    return cached(beta, &Entry::genus1, [&] { return compute_genus1(beta); });
}

Rational Engine::compute_genus1(const LatticeVector& beta) {
    const std::int64_t sq = square(beta);
    if (sq == 0) return isotropic_genus1(divisibility(beta));
    return Rational(8) * decomposition_pair_sum(beta) / Rational(sq);
}

Rational Engine::decomposition_pair_sum(const LatticeVector& beta) {
    if (!is_positive(beta)) throw std::invalid_argument("decomposition sum requires a positive class");
    return cached(beta, &Entry::pair_sum, [&] { return compute_pair_sum(beta); });
}

Rational Engine::compute_pair_sum(const LatticeVector& beta) {
    // Terms come in swapped pairs with equal value; visit each unordered pair once.
    Rational sum;
    options_.decompositions(beta, [&](const LatticeVector& first, const LatticeVector& second) {
        if (second < first) return;
        const std::int64_t p = pair(first, second);
        if (p == 0) return;
        const Rational term = enriques_genus1(first) * enriques_genus1(second);
        sum.add_product(term, Rational(first == second ? p : 2 * p));
    });
    return sum;
}

Rational Engine::n1_fiber(const LatticeVector& beta) { return Rational(4) * enriques_genus1(beta); }

Rational Engine::enriques_genus2_lambda1(const LatticeVector& beta) {
    return enriques_genus1(beta) * Rational(square(beta), 16);
}

Rational Engine::n2_fiber(const LatticeVector& beta) { return -n1_fiber(beta) * Rational(square(beta), 16); }

Rational Engine::theorem3_bracket(const LatticeVector& beta) {
    if (beta.is_zero()) throw UnstableClassError("genus 2 bracket of the zero class");
    if (!is_positive(beta)) return Rational(0);
    return cached(beta, &Entry::bracket, [&] { return compute_bracket(beta); });
}

Rational Engine::compute_bracket(const LatticeVector& beta) {
    Rational sum = n1_fiber(beta) * Rational(square(beta));
    options_.decompositions(beta, [&](const LatticeVector& first, const LatticeVector& second) {
        const std::int64_t p = pair(first, second);
        if (p == 0) return;
        sum.add_product(n1_fiber(first) * n1_fiber(second), Rational(p));
    });
    return sum;
}

InvariantRecord Engine::n_invariant(int genus, const CurveClassQ& cls) {
    if (genus < 0 || genus > 2) {
        throw UnsupportedGenusError("genus out of supported range: " + std::to_string(genus) + " (supported: 0, 1, 2)");
    }
    if (cls.d < 0) throw std::invalid_argument("fiber degree must be non-negative");
    const bool beta_zero = cls.beta.is_zero();
    if (genus <= 1 && beta_zero && cls.d == 0) {
        throw UnstableClassError("unstable class: (0, 0) is not considered in genus " + std::to_string(genus));
    }

    InvariantRecord rec{genus, cls, Rational(0), Rule::vanishing};
    auto fiber_rule = [&](const LatticeVector& beta) {
        if (!is_positive(beta) || square(beta) < 0) return Rule::vanishing;
        return square(beta) == 0 ? Rule::isotropic_base : Rule::recursion;
    };

    switch (genus) {
        case 0:
            break;
        case 1:
            if (beta_zero) {
                rec.value = Rational(12) * qseries::sigma_pow(-1, cls.d);
                rec.rule = Rule::elliptic;
            } else if (cls.d == 0) {
                rec.value = n1_fiber(cls.beta);
                rec.rule = fiber_rule(cls.beta);
            }
            break;
        case 2:
            if (beta_zero) break;
            if (cls.d == 0) {
                rec.value = n2_fiber(cls.beta);
                rec.rule = fiber_rule(cls.beta) == Rule::vanishing ? Rule::vanishing : Rule::fiber;
            } else if (is_positive(cls.beta)) {
                rec.value = qseries::sigma_pow(1, cls.d) * theorem3_bracket(cls.beta);
                rec.rule = Rule::theorem3;
            }
            break;
        default:
            break;
    }
    return rec;
}

std::size_t Engine::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

Engine& default_engine() {
    static Engine engine;
    return engine;
}

Rational enriques_genus1(const LatticeVector& beta) { return default_engine().enriques_genus1(beta); }
Rational n1_fiber(const LatticeVector& beta) { return default_engine().n1_fiber(beta); }
Rational enriques_genus2_lambda1(const LatticeVector& beta) { return default_engine().enriques_genus2_lambda1(beta); }
Rational n2_fiber(const LatticeVector& beta) { return default_engine().n2_fiber(beta); }
InvariantRecord n_invariant(int genus, const CurveClassQ& cls) { return default_engine().n_invariant(genus, cls); }

CorollaryReport e2_corollary_check(Engine& engine, const LatticeVector& beta, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    CorollaryReport r;
    r.beta = beta;
    r.order = order;
    std::vector<Rational> lhs;
    lhs.reserve(static_cast<std::size_t>(order + 1));
    for (std::int64_t d = 0; d <= order; ++d) lhs.push_back(engine.n_invariant(2, CurveClassQ{beta, d}).value);
    r.lhs = qseries::QSeries(0, std::move(lhs));
    r.rhs = qseries::eisenstein(2, order) * engine.n2_fiber(beta);
    r.all_equal = true;
    for (std::int64_t d = 0; d <= order; ++d) {
        const bool eq = r.lhs.coeff(d) == r.rhs.coeff(d);
        r.equal.push_back(eq);
        r.all_equal = r.all_equal && eq;
    }
    return r;
}

CorollaryReport e2_corollary_check(const LatticeVector& beta, std::int64_t order) {
    return e2_corollary_check(default_engine(), beta, order);
}

}  // namespace enriques::gw

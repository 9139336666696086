#pragma once

#include <utility>

#include "ctxwit/qubit.hpp"

namespace ctxwit {

/// The triple indexing every bound: state overlap, depolarising-noise
/// parameter, and the fixed rate of inconclusive outcomes.
struct ScenarioParams {
    double delta = 0.0;
    double r_s = 1.0;
    double p_inc = 0.0;

    /// Throws PreconditionError unless all three lie in [0, 1].
    void validate() const;
};

/// A behaviour: averaged success, error and inconclusive probabilities.
/// Valid when all fields lie in [0,1] and they sum to 1 within 1e-12.
struct OutcomeStats {
    double p_suc = 0.0;
    double p_err = 0.0;
    double p_inc = 0.0;

    bool is_valid(double tol = 1e-12) const;
};

/// Piecewise regimes of the optimal discrimination measurement. The
/// low-p_inc piece applies for p_inc <= r_s * delta (with ties resolved to
/// low_pinc; both pieces agree at the breakpoint), the high-p_inc piece
/// beyond it.
enum class Branch { low_pinc, high_pinc };

Branch quantum_branch(const ScenarioParams& params);

/// The two noisy preparations, oriented symmetrically about the Z axis:
///   rho_{0,1} = (1/2)[I +- r_s sqrt(1-delta^2) X + r_s delta Z].
/// At r_s = 1 they are pure with |<psi0|psi1>| = delta.
std::pair<Hermitian2, Hermitian2> make_states(const ScenarioParams& params);

/// Largest achievable witness value (p_suc - p_err)/2 over all three-outcome
/// measurements with the given inconclusive rate:
///   p_inc <= r_s delta:  (r_s/2) sqrt((1-delta^2)(1 - 2 p_inc/(1+r_s delta)))
///   p_inc >= r_s delta:  (r_s/2) sqrt(1-delta^2) (1-p_inc)/sqrt(1-r_s^2 delta^2)
/// The second form is the algebraic simplification that avoids a 0/0 at
/// delta = r_s = 1; that degenerate point returns 0 (identical states).
double quantum_witness_max(const ScenarioParams& params);

/// Behaviour of the witness-optimal measurement. p_suc is forced by the
/// fixed sum (1 - p_inc) and difference (2 W):  p_suc = (1 + 2W - p_inc)/2.
OutcomeStats quantum_optimal_stats(const ScenarioParams& params);

/// Explicit optimal POVM for the applicable piece. Requires delta < 1 or
/// r_s < 1. The construction is checked on return: POVM validity, the
/// inconclusive element reproduces p_inc within 1e-10, and the achieved
/// witness equals quantum_witness_max within 1e-10 (ConsistencyError
/// otherwise, naming the failed check).
Povm3 quantum_optimal_povm(const ScenarioParams& params);

/// Minimum-error (p_inc = 0) optimum; at r_s = 1 the error probability is
/// the Helstrom value (1 - sqrt(1-delta^2))/2.
OutcomeStats helstrom_stats(double delta, double r_s);

/// p_suc / (p_suc + p_err). Throws UndefinedConfidenceError when every
/// outcome is inconclusive.
double confidence(const OutcomeStats& stats);

/// Behaviour of `povm` measured on the pair of states.
OutcomeStats measure_stats(const Hermitian2& rho0, const Hermitian2& rho1, const Povm3& povm);

}  // namespace ctxwit

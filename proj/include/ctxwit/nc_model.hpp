#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ctxwit/quantum.hpp"

namespace ctxwit {

// The ontic space is reduced to four atomic regions, indexed in this order:
//   A = supp mu0 & supp mu1     (the overlap)
//   B = supp mu0 & supp mu1c
//   C = supp mu0c & supp mu1
//   D = supp mu0c & supp mu1c
// The epistemic states and every constraint depend only on masses over
// these regions. Measurements are restricted to response functions that
// are non-negative mixtures of the four support-membership tests
// chi(supp mu0), chi(supp mu1), chi(supp mu0c), chi(supp mu1c); the closed
// forms below are the exact maxima over that family, and the LP oracle
// enumerates its vertices. (An unrestricted response function could divert
// all inconclusive weight onto the overlap region and discriminate the rest
// for free, which no support test can express.)

inline constexpr int kRegionA = 0;
inline constexpr int kRegionB = 1;
inline constexpr int kRegionC = 2;
inline constexpr int kRegionD = 3;

/// Noisy epistemic states over the four regions, plus the defining
/// parameters. The noiseless states, their complements, and the average
/// are exposed for the operational-equivalence invariants.
struct OnticModel {
    double c = 0.0;
    double r_s = 1.0;
    std::array<double, 4> mu0_noisy{};
    std::array<double, 4> mu1_noisy{};

    std::array<double, 4> mu0() const { return {c, 1.0 - c, 0.0, 0.0}; }
    std::array<double, 4> mu1() const { return {c, 0.0, 1.0 - c, 0.0}; }
    std::array<double, 4> mu0_perp() const { return {0.0, 0.0, 1.0 - c, c}; }
    std::array<double, 4> mu1_perp() const { return {0.0, 1.0 - c, 0.0, c}; }
    /// (mu0 + mu0_perp)/2 = (mu1 + mu1_perp)/2: the maximally mixed state.
    std::array<double, 4> mixed() const {
        return {c / 2.0, (1.0 - c) / 2.0, (1.0 - c) / 2.0, c / 2.0};
    }
    /// (mu0_noisy + mu1_noisy)/2; weights the inconclusive-rate constraint.
    std::array<double, 4> average() const;
};

OnticModel make_ontic_model(double c, double r_s);

/// Three response functions constant on regions. Rows are outcomes
/// (0, 1, inconclusive); columns are regions (A, B, C, D).
struct ResponseFunction {
    std::array<std::array<double, 4>, 3> xi{};

    /// Entries >= 0 and each region's column sums to 1, within tol.
    bool is_valid(double tol = 1e-12) const;
};

OutcomeStats stats_from_response(const OnticModel& model, const ResponseFunction& rf);

Branch nc_branch(double c, double r_s, double p_inc);

/// Largest witness value reachable by the noncontextual model:
///   p_inc <= (1+r_s c)/2:  (r_s/2)(1-c)(1 - p_inc/(1+r_s c))
///   p_inc >= (1+r_s c)/2:  (1/2)(1-p_inc) r_s (1-c)/(1-r_s c)
/// c = r_s = 1 in the second piece is a 0/0 limit and returns 0.
double nc_witness_max(double c, double r_s, double p_inc);

/// Behaviour of the witness-optimal response functions.
OutcomeStats nc_optimal_stats(double c, double r_s, double p_inc);

/// Witness-optimal response functions for the applicable piece; checked on
/// return against nc_optimal_stats and the inconclusive rate within 1e-12
/// (ConsistencyError naming the failed check otherwise).
ResponseFunction nc_optimal_response(double c, double r_s, double p_inc);

/// Confidence of the optimal noncontextual behaviour. Throws
/// UndefinedConfidenceError at p_inc = 1.
double nc_max_confidence(double c, double r_s, double p_inc);

namespace detail {

/// The two closed optimal families, in region coordinates. The low-p_inc
/// family with a = b reduces exactly to the high-p_inc family with q = a.
ResponseFunction response_low_pinc(double a, double b);
ResponseFunction response_high_pinc(double q);

}  // namespace detail

/// One region of a generalized LP instance: noisy masses plus membership
/// in the four supports (S0, S1, S0c, S1c). Splitting a region into
/// sub-regions with proportional masses leaves the LP optimum unchanged.
struct NcRegion {
    double mu0 = 0.0;
    double mu1 = 0.0;
    std::array<bool, 4> in_support{};
};

struct NcLpResult {
    double value = 0.0;
    std::vector<std::array<double, 3>> xi;  // per region: (xi_0, xi_1, xi_inc)
};

/// Exact maximisation of the witness over response functions in the
/// support-test cone, at fixed inconclusive rate: enumerates every basic
/// feasible solution of the mixing-weight polytope (12 non-negative
/// weights, one normalisation equality per region, one rate equality) and
/// returns the best vertex. Ties go to the earliest basis.
NcLpResult nc_lp_witness_max(const std::vector<NcRegion>& regions, double p_inc);

struct LpSolution {
    double value = 0.0;
    ResponseFunction xi;
};

/// LP oracle for the standard four-region model. Asserts agreement with
/// nc_witness_max within 1e-9 and throws DiscrepancyError (carrying both
/// values) otherwise.
LpSolution lp_oracle(double c, double r_s, double p_inc);

/// All vertices of the feasible response-function polytope of the model,
/// with no inconclusive-rate constraint. Any convex combination is a
/// feasible noncontextual measurement.
std::vector<ResponseFunction> response_polytope_vertices(const OnticModel& model);

}  // namespace ctxwit

#include "ctxwit/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ctxwit {

namespace {

void check_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw PreconditionError(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

void ScenarioParams::validate() const {
    check_unit_interval(delta, "delta");
    check_unit_interval(r_s, "r_s");
    check_unit_interval(p_inc, "p_inc");
}

bool OutcomeStats::is_valid(double tol) const {
    const double lo = -tol;
    const double hi = 1.0 + tol;
    if (p_suc < lo || p_suc > hi || p_err < lo || p_err > hi || p_inc < lo || p_inc > hi) {
        return false;
    }
    return std::abs(p_suc + p_err + p_inc - 1.0) <= tol;
}

Branch quantum_branch(const ScenarioParams& params) {
    return params.p_inc <= params.r_s * params.delta ? Branch::low_pinc : Branch::high_pinc;
}

std::pair<Hermitian2, Hermitian2> make_states(const ScenarioParams& params) {
    params.validate();
    const double sx = params.r_s * std::sqrt(1.0 - params.delta * params.delta);
    const double sz = params.r_s * params.delta;
    return {bloch_operator(1.0, {sx, 0.0, sz}), bloch_operator(1.0, {-sx, 0.0, sz})};
}

double quantum_witness_max(const ScenarioParams& params) {
    params.validate();
    const double d2 = params.delta * params.delta;
    if (quantum_branch(params) == Branch::low_pinc) {
        const double inner = (1.0 - d2) * (1.0 - 2.0 * params.p_inc / (1.0 + params.r_s * params.delta));
        return (params.r_s / 2.0) * std::sqrt(std::max(0.0, inner));
    }
    const double b = 1.0 - params.r_s * params.r_s * d2;
    if (b <= 0.0) {
        return 0.0;  // delta = r_s = 1: identical states, nothing to discriminate
    }
    return (params.r_s / 2.0) * std::sqrt(1.0 - d2) * (1.0 - params.p_inc) / std::sqrt(b);
}

OutcomeStats quantum_optimal_stats(const ScenarioParams& params) {
    const double w = quantum_witness_max(params);
    OutcomeStats stats;
    stats.p_inc = params.p_inc;
    stats.p_err = 0.5 * (1.0 - params.p_inc) - w;
    if (stats.p_err < 0.0 && stats.p_err > -1e-12) {
        stats.p_err = 0.0;  // unambiguous regime, exact zero up to rounding
    }
    stats.p_suc = 1.0 - params.p_inc - stats.p_err;
    return stats;
}

Povm3 quantum_optimal_povm(const ScenarioParams& params) {
    params.validate();
    if (params.delta >= 1.0 && params.r_s >= 1.0) {
        throw PreconditionError("quantum_optimal_povm: requires delta < 1 or r_s < 1");
    }
    const double rd = params.r_s * params.delta;
    const double p = params.p_inc;

    Povm3 povm;
    if (quantum_branch(params) == Branch::low_pinc) {
        const double a = 1.0 + rd;
        const double scale = (a - p) / a;
        // Conclusive elements are rank-1; |n| = tr holds exactly.
        const double ux = std::sqrt(std::max(0.0, a * (a - 2.0 * p))) / a;
        povm.out0 = {scale, {ux, 0.0, -p / a}};
        povm.out1 = {scale, {-ux, 0.0, -p / a}};
        povm.inc = {2.0 * p / a, {0.0, 0.0, 2.0 * p / a}};
    } else {
        const double b = 1.0 - rd * rd;
        const double q = 1.0 - p;
        povm.out0 = {q / b, {q / std::sqrt(b), 0.0, -q * rd / b}};
        povm.out1 = {q / b, {-q / std::sqrt(b), 0.0, -q * rd / b}};
        povm.inc = {2.0 * (p - rd * rd) / b, {0.0, 0.0, 2.0 * q * rd / b}};
    }

    if (!povm.is_valid(kPsdTol)) {
        throw ConsistencyError("quantum_optimal_povm: POVM validity check failed");
    }
    const auto [rho0, rho1] = make_states(params);
    const Hermitian2 avg = (rho0 + rho1) * 0.5;
    if (std::abs(trace_product(avg, povm.inc) - p) > 1e-10) {
        throw ConsistencyError("quantum_optimal_povm: inconclusive rate check failed");
    }
    const OutcomeStats stats = measure_stats(rho0, rho1, povm);
    const double achieved = (stats.p_suc - stats.p_err) / 2.0;
    if (std::abs(achieved - quantum_witness_max(params)) > 1e-10) {
        throw ConsistencyError("quantum_optimal_povm: achieved witness check failed");
    }
    return povm;
}

OutcomeStats helstrom_stats(double delta, double r_s) {
    return quantum_optimal_stats({delta, r_s, 0.0});
}

double confidence(const OutcomeStats& stats) {
    const double conclusive = stats.p_suc + stats.p_err;
    if (conclusive <= 0.0) {
        throw UndefinedConfidenceError("confidence undefined: all outcomes inconclusive");
    }
    return stats.p_suc / conclusive;
}

OutcomeStats measure_stats(const Hermitian2& rho0, const Hermitian2& rho1, const Povm3& povm) {
    OutcomeStats stats;
    stats.p_suc = 0.5 * (trace_product(rho0, povm.out0) + trace_product(rho1, povm.out1));
    stats.p_err = 0.5 * (trace_product(rho0, povm.out1) + trace_product(rho1, povm.out0));
    stats.p_inc = 0.5 * (trace_product(rho0, povm.inc) + trace_product(rho1, povm.inc));
    return stats;
}

}  // namespace ctxwit

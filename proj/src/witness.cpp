#include "ctxwit/witness.hpp"

#include <cmath>

namespace ctxwit {

namespace {

// Classifying "no gap at r_s = 1" with a strict zero would be unstable:
// where the models coincide the two closed forms agree only up to rounding.
// Every genuine gap on the tested grids is orders of magnitude larger.
constexpr double kGapEps = 1e-12;

constexpr double kBisectTol = 1e-10;
constexpr int kBisectMaxIter = 60;

}  // namespace

double witness_value(const OutcomeStats& stats) {
    return (stats.p_suc - stats.p_err) / 2.0;
}

double noncontextual_bound(double delta, double p_inc, BoundForm form) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw PreconditionError("delta must lie in [0, 1]");
    }
    const double c = delta * delta;
    if (form == BoundForm::printed_low_pinc) {
        if (!(p_inc >= 0.0 && p_inc <= 1.0)) {
            throw PreconditionError("p_inc must lie in [0, 1]");
        }
        return ((1.0 - c) / 2.0) * (1.0 - p_inc / (1.0 + c));
    }
    return nc_witness_max(c, 1.0, p_inc);
}

WitnessVerdict is_contextual(const OutcomeStats& stats, double delta_lower_bound) {
    WitnessVerdict verdict;
    verdict.delta_lower_bound = delta_lower_bound;
    verdict.p_inc = stats.p_inc;
    verdict.w_observed = witness_value(stats);
    verdict.w_star = noncontextual_bound(delta_lower_bound, stats.p_inc);
    verdict.margin = verdict.w_observed - verdict.w_star;
    verdict.contextual = verdict.margin > 0.0;
    return verdict;
}

std::optional<double> noise_tolerance(double delta, double p_inc) {
    const double target = noncontextual_bound(delta, p_inc);
    if (quantum_witness_max({delta, 1.0, p_inc}) <= target + kGapEps) {
        return std::nullopt;
    }
    double lo = 0.0;  // witness 0 < target
    double hi = 1.0;  // reaches the bound
    for (int i = 0; i < kBisectMaxIter && hi - lo > kBisectTol; ++i) {
        const double mid = (lo + hi) / 2.0;
        if (quantum_witness_max({delta, mid, p_inc}) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

ToleranceCurve tolerance_curve(double delta, const std::vector<double>& p_inc_grid) {
    for (std::size_t i = 0; i < p_inc_grid.size(); ++i) {
        if (!(p_inc_grid[i] >= 0.0 && p_inc_grid[i] <= 1.0)) {
            throw PreconditionError("tolerance_curve: grid values must lie in [0, 1]");
        }
        if (i > 0 && !(p_inc_grid[i] > p_inc_grid[i - 1])) {
            throw PreconditionError("tolerance_curve: grid must be strictly increasing");
        }
    }
    ToleranceCurve curve;
    curve.delta = delta;
    curve.points.reserve(p_inc_grid.size());
    for (double p : p_inc_grid) {
        curve.points.push_back({p, noise_tolerance(delta, p)});
    }
    return curve;
}

}  // namespace ctxwit

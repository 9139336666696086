#pragma once

#include <optional>
#include <vector>

#include "ctxwit/nc_model.hpp"
#include "ctxwit/quantum.hpp"

namespace ctxwit {

/// W = (p_suc - p_err)/2, in [-1/2, 1/2].
double witness_value(const OutcomeStats& stats);

/// Which algebraic form of the noncontextual bound to evaluate.
/// `piecewise` is the full noiseless noncontextual maximum and is the
/// default; `printed_low_pinc` is the single low-p_inc expression
/// ((1-delta^2)/2)(1 - p_inc/(1+delta^2)) extended past its validity
/// threshold, kept only for reproducing that exact formula (it overshoots
/// the true bound for p_inc > (1+delta^2)/2, weakening the witness there).
enum class BoundForm { piecewise, printed_low_pinc };

/// The noncontextual bound W*(delta, p_inc): the noiseless (r_s = 1)
/// noncontextual maximum at confusability c = delta^2. Nonincreasing in
/// both arguments.
double noncontextual_bound(double delta, double p_inc, BoundForm form = BoundForm::piecewise);

struct WitnessVerdict {
    double w_observed = 0.0;
    double w_star = 0.0;
    bool contextual = false;  // = (margin > 0)
    double margin = 0.0;      // w_observed - w_star
    // Assumptions the verdict was evaluated under.
    double delta_lower_bound = 0.0;
    double p_inc = 0.0;
};

/// Decides contextuality of a behaviour given a lower bound on the overlap.
/// Sound because the bound is nonincreasing in delta: any true overlap
/// above the stated lower bound only lowers W*. Strict inequality, no
/// statistical buffer; the margin is reported so callers can apply error
/// bars of their own.
WitnessVerdict is_contextual(const OutcomeStats& stats, double delta_lower_bound);

/// Smallest r_s in (0, 1] whose quantum optimum still reaches the
/// noncontextual bound, found by bisection (valid because the quantum
/// optimum is nondecreasing in r_s). Empty when even r_s = 1 has no strict
/// gap (delta in {0, 1}, or p_inc >= (1+delta^2)/2, where the models
/// coincide).
std::optional<double> noise_tolerance(double delta, double p_inc);

struct ToleranceCurve {
    struct Point {
        double p_inc = 0.0;
        std::optional<double> r_min;
    };
    double delta = 0.0;
    std::vector<Point> points;  // ordered by strictly increasing p_inc
};

/// noise_tolerance evaluated over a strictly increasing p_inc grid.
ToleranceCurve tolerance_curve(double delta, const std::vector<double>& p_inc_grid);

}  // namespace ctxwit

#pragma once

#include <string>
#include <vector>

#include "ctxwit/witness.hpp"

namespace ctxwit {

enum class Model { quantum, noncontextual, deterministic };

/// Closed boundary of a feasible region in the (p_suc, p_err) plane,
/// parameterized by p_inc along the optimal trace and closed by the
/// mirrored trace (outcome relabelling swaps the coordinates exactly) and
/// the conclusive p_suc + p_err = 1 edge.
struct RegionCurve {
    struct Point {
        double p_inc = 0.0;
        double p_suc = 0.0;
        double p_err = 0.0;
        // "low_pinc"/"high_pinc" on the optimal trace, "mirror" on the
        // swapped trace, "conclusive" on the closing p_inc = 0 edge.
        std::string branch;
    };

    Model model = Model::quantum;
    double delta_or_c = 0.0;
    double r_s = 1.0;
    std::vector<Point> points;
};

/// Boundary traced by the quantum optimum over p_inc in [0, 1] at n_points
/// grid points, with the breakpoint p_inc = r_s * delta inserted exactly.
RegionCurve quantum_boundary(double delta, double r_s, int n_points);

/// Same for the noncontextual optimum; breakpoint p_inc = (1 + r_s c)/2.
RegionCurve nc_boundary(double c, double r_s, int n_points);

/// Membership test: |W(stats)| <= model bound at the behaviour's own p_inc,
/// within 1e-12. The absolute value implements the mirror symmetry. The
/// deterministic model's bound is the trivial (1 - p_inc)/2.
bool in_region(const OutcomeStats& stats, Model model, double delta_or_c, double r_s);

}  // namespace ctxwit

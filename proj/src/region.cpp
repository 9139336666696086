#include "ctxwit/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ctxwit {

namespace {

RegionCurve trace_boundary(Model model, double delta_or_c, double r_s, int n_points,
                           double breakpoint,
                           const std::function<OutcomeStats(double)>& optimal_stats) {
    if (n_points < 3) {
        throw PreconditionError("boundary: n_points must be >= 3");
    }

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n_points) + 1);
    for (int i = 0; i < n_points; ++i) {
        grid.push_back(static_cast<double>(i) / (n_points - 1));
    }
    if (breakpoint > 0.0 && breakpoint < 1.0) {
        grid.push_back(breakpoint);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    RegionCurve curve;
    curve.model = model;
    curve.delta_or_c = delta_or_c;
    curve.r_s = r_s;
    curve.points.reserve(2 * grid.size() + 1);

    for (double p : grid) {
        const OutcomeStats s = optimal_stats(p);
        curve.points.push_back({p, s.p_suc, s.p_err, p <= breakpoint ? "low_pinc" : "high_pinc"});
    }
    // Mirrored trace, walking back towards p_inc = 0; the p_inc = 1 corner
    // (0, 0) is its own mirror image and is not repeated.
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        if (*it == 1.0) {
            continue;
        }
        const OutcomeStats s = optimal_stats(*it);
        curve.points.push_back({*it, s.p_err, s.p_suc, "mirror"});
    }
    // Closing edge p_suc + p_err = 1 back to the start vertex.
    const RegionCurve::Point& first = curve.points.front();
    curve.points.push_back({0.0, first.p_suc, first.p_err, "conclusive"});
    return curve;
}

}  // namespace

RegionCurve quantum_boundary(double delta, double r_s, int n_points) {
    ScenarioParams probe{delta, r_s, 0.0};
    probe.validate();
    return trace_boundary(Model::quantum, delta, r_s, n_points, r_s * delta, [&](double p) {
        return quantum_optimal_stats({delta, r_s, p});
    });
}

RegionCurve nc_boundary(double c, double r_s, int n_points) {
    make_ontic_model(c, r_s);  // range checks
    const double breakpoint = (1.0 + r_s * c) / 2.0;
    return trace_boundary(Model::noncontextual, c, r_s, n_points, breakpoint, [&](double p) {
        return nc_optimal_stats(c, r_s, p);
    });
}

bool in_region(const OutcomeStats& stats, Model model, double delta_or_c, double r_s) {
    double bound = 0.0;
    switch (model) {
        case Model::quantum:
            bound = quantum_witness_max({delta_or_c, r_s, stats.p_inc});
            break;
        case Model::noncontextual:
            bound = nc_witness_max(delta_or_c, r_s, stats.p_inc);
            break;
        case Model::deterministic:
            bound = (1.0 - stats.p_inc) / 2.0;
            break;
    }
    return std::abs(witness_value(stats)) <= bound + 1e-12;
}

}  // namespace ctxwit

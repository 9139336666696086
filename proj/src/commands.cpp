#include "ctxwit/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctxwit/format.hpp"
#include "ctxwit/oracle.hpp"
#include "ctxwit/svg.hpp"

namespace ctxwit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* branch_name(Branch b) {
    return b == Branch::low_pinc ? "low_pinc" : "high_pinc";
}

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw UsageError(std::string(name) + " must lie in [0, 1]");
    }
}

ordered_json confidence_or_null(const OutcomeStats& stats) {
    if (stats.p_suc + stats.p_err <= 0.0) {
        return nullptr;
    }
    return round9(confidence(stats));
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.flush();
    if (!out.good()) {
        throw IoError("cannot write output file: " + path);
    }
}

std::vector<double> arithmetic_grid(double start, double stop, double step) {
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double v = start + k * step;
        if (v > stop + 1e-12) {
            break;
        }
        grid.push_back(std::min(v, stop));
    }
    return grid;
}

SvgCurve curve_from_region(const RegionCurve& region, std::string label, std::string color) {
    SvgCurve curve;
    curve.label = std::move(label);
    curve.color = std::move(color);
    curve.points.reserve(region.points.size());
    for (const auto& p : region.points) {
        curve.points.emplace_back(p.p_err, p.p_suc);
    }
    return curve;
}

SvgCurve deterministic_triangle() {
    SvgCurve curve;
    curve.label = "deterministic";
    curve.color = "#555555";
    curve.dashed = true;
    curve.points = {{0.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
    return curve;
}

}  // namespace

std::string bounds_report(const BoundsRequest& req) {
    require_unit(req.delta, "delta");
    require_unit(req.r_s, "rs");
    require_unit(req.p_inc, "pinc");

    const ScenarioParams params{req.delta, req.r_s, req.p_inc};
    const double wq = quantum_witness_max(params);
    const OutcomeStats sq = quantum_optimal_stats(params);
    const double c = req.delta * req.delta;
    const double wnc = nc_witness_max(c, req.r_s, req.p_inc);
    const OutcomeStats snc = nc_optimal_stats(c, req.r_s, req.p_inc);
    const double wstar = noncontextual_bound(req.delta, req.p_inc);

    ordered_json report;
    report["schema_version"] = 1;
    report["delta"] = round9(req.delta);
    report["r_s"] = round9(req.r_s);
    report["p_inc"] = round9(req.p_inc);
    report["confusability"] = round9(c);
    report["w_q"] = round9(wq);
    report["branch_q"] = branch_name(quantum_branch(params));
    report["p_suc_q"] = round9(sq.p_suc);
    report["p_err_q"] = round9(sq.p_err);
    report["confidence_q"] = confidence_or_null(sq);
    report["w_nc"] = round9(wnc);
    report["branch_nc"] = branch_name(nc_branch(c, req.r_s, req.p_inc));
    report["p_suc_nc"] = round9(snc.p_suc);
    report["p_err_nc"] = round9(snc.p_err);
    report["confidence_nc"] = confidence_or_null(snc);
    report["w_star"] = round9(wstar);
    report["gap"] = round9(wq - wstar);
    report["contextual_gap_open"] = wq - wstar > 0.0;
    return report.dump(2) + "\n";
}

VerifyReport run_verify(const VerifyRequest& req) {
    if (req.grid < 2) {
        throw UsageError("grid must be >= 2");
    }
    VerifyReport report;

    const SweepConfig cfg{req.grid, req.grid, req.seed, 1e-9};
    constexpr double kQuantumTol = 1e-4;
    constexpr double kLpTol = 1e-9;

    long quantum_points = 0;
    for (double delta : arithmetic_grid(0.1, 0.9, 0.1)) {
        for (double r_s : {0.5, 0.7, 1.0}) {
            for (double p_inc : arithmetic_grid(0.0, 0.9, 0.1)) {
                const ScenarioParams params{delta, r_s, p_inc};
                const OracleResult oracle = sweep_witness_max(params, cfg);
                const double closed = quantum_witness_max(params) + req.wq_bias;
                const double gap = std::abs(closed - oracle.value);
                report.max_quantum_gap = std::max(report.max_quantum_gap, gap);
                if (gap > kQuantumTol) {
                    std::ostringstream msg;
                    msg << "quantum delta=" << fmt9(delta) << " r_s=" << fmt9(r_s)
                        << " p_inc=" << fmt9(p_inc) << " gap=" << fmt9(gap);
                    report.failures.push_back(msg.str());
                }
                ++quantum_points;
            }
        }
    }

    long nc_points = 0;
    for (double c : arithmetic_grid(0.0, 1.0, 0.05)) {
        for (double r_s : arithmetic_grid(0.0, 1.0, 0.1)) {
            for (double p_inc : arithmetic_grid(0.0, 1.0, 0.05)) {
                const OnticModel model = make_ontic_model(c, r_s);
                std::vector<NcRegion> regions(4);
                const std::array<std::array<bool, 4>, 4> patterns{{
                    {true, true, false, false},
                    {true, false, false, true},
                    {false, true, true, false},
                    {false, false, true, true},
                }};
                for (int r = 0; r < 4; ++r) {
                    regions[r] = {model.mu0_noisy[r], model.mu1_noisy[r], patterns[r]};
                }
                const double lp = nc_lp_witness_max(regions, p_inc).value;
                const double closed = nc_witness_max(c, r_s, p_inc) + req.wnc_bias;
                const double gap = std::abs(closed - lp);
                report.max_lp_gap = std::max(report.max_lp_gap, gap);
                if (gap > kLpTol) {
                    std::ostringstream msg;
                    msg << "noncontextual c=" << fmt9(c) << " r_s=" << fmt9(r_s)
                        << " p_inc=" << fmt9(p_inc) << " gap=" << fmt9(gap);
                    report.failures.push_back(msg.str());
                }
                ++nc_points;
            }
        }
    }

    // Planar restriction check: random full-sphere proposals must not beat
    // the planar sweep.
    const ScenarioParams spot_params[] = {
        {0.5, 1.0, 0.3}, {0.3, 0.7, 0.1}, {0.8, 0.9, 0.6}};
    for (const ScenarioParams& params : spot_params) {
        const double planar = sweep_witness_max(params, cfg).value;
        const double off = offplane_spot_max(params, cfg, req.offplane_samples);
        report.max_offplane_excess = std::max(report.max_offplane_excess, off - planar);
        if (off > planar + cfg.tolerance) {
            std::ostringstream msg;
            msg << "offplane delta=" << fmt9(params.delta) << " r_s=" << fmt9(params.r_s)
                << " p_inc=" << fmt9(params.p_inc) << " excess=" << fmt9(off - planar);
            report.failures.push_back(msg.str());
        }
    }

    report.ok = report.failures.empty();

    ordered_json j;
    j["schema_version"] = 1;
    j["grid"] = req.grid;
    j["seed"] = req.seed;
    j["quantum_points"] = quantum_points;
    j["max_quantum_gap"] = round9(report.max_quantum_gap);
    j["quantum_tolerance"] = kQuantumTol;
    j["nc_points"] = nc_points;
    j["max_lp_gap"] = round9(report.max_lp_gap);
    j["lp_tolerance"] = kLpTol;
    j["offplane_samples"] = req.offplane_samples;
    j["max_offplane_excess"] = round9(report.max_offplane_excess);
    j["ok"] = report.ok;
    j["failures"] = report.failures;
    report.json = j.dump(2) + "\n";
    return report;
}

std::string region_csv(const RegionCurve& curve) {
    std::ostringstream out;
    out << "p_inc,p_suc,p_err,branch\n";
    for (const auto& p : curve.points) {
        out << fmt9(p.p_inc) << "," << fmt9(p.p_suc) << "," << fmt9(p.p_err) << "," << p.branch
            << "\n";
    }
    return out.str();
}

std::string region_output(const RegionRequest& req) {
    require_unit(req.r_s, "rs");
    if (req.n_points < 3) {
        throw UsageError("points must be >= 3");
    }

    std::optional<RegionCurve> quantum;
    std::optional<RegionCurve> noncontextual;
    if (req.model == "quantum" || req.model == "both") {
        if (req.delta < 0.0) {
            throw UsageError("--delta is required for the quantum model");
        }
        require_unit(req.delta, "delta");
        quantum = quantum_boundary(req.delta, req.r_s, req.n_points);
    }
    if (req.model == "noncontextual" || req.model == "both") {
        double c = req.c;
        if (req.model == "both" && c < 0.0) {
            c = req.delta * req.delta;
        }
        if (c < 0.0) {
            throw UsageError("--c is required for the noncontextual model");
        }
        require_unit(c, "c");
        noncontextual = nc_boundary(c, req.r_s, req.n_points);
    }
    if (!quantum && !noncontextual) {
        throw UsageError("unknown model: " + req.model);
    }

    if (req.format == "csv") {
        if (req.model == "both") {
            throw UsageError("CSV output covers a single model; use --format svg for both");
        }
        return region_csv(quantum ? *quantum : *noncontextual);
    }
    if (req.format != "svg") {
        throw UsageError("unknown format: " + req.format);
    }

    std::vector<SvgCurve> curves{deterministic_triangle()};
    if (quantum) {
        curves.push_back(curve_from_region(*quantum, "quantum (delta=" + fmt9(req.delta) + ")",
                                           "#7b2d8b"));
    }
    if (noncontextual) {
        curves.push_back(curve_from_region(
            *noncontextual, "noncontextual (c=" + fmt9(noncontextual->delta_or_c) + ")",
            "#1d7a33"));
    }
    return render_svg_plot("Feasible discrimination behaviours (r_s=" + fmt9(req.r_s) + ")",
                           "p_err", "p_suc", curves);
}

std::string tolerance_output(const ToleranceRequest& req) {
    if (req.deltas.empty()) {
        throw UsageError("at least one --delta is required");
    }
    for (double d : req.deltas) {
        require_unit(d, "delta");
    }
    if (!(req.pinc_step > 0.0) || !(req.pinc_max >= 0.0 && req.pinc_max <= 1.0)) {
        throw UsageError("pinc grid must satisfy 0 <= pinc-max <= 1 and pinc-step > 0");
    }

    const std::vector<double> grid = arithmetic_grid(0.0, req.pinc_max, req.pinc_step);
    std::vector<ToleranceCurve> curves;
    curves.reserve(req.deltas.size());
    for (double d : req.deltas) {
        curves.push_back(tolerance_curve(d, grid));
    }

    if (req.format == "csv") {
        std::ostringstream out;
        out << "delta,p_inc,r_min\n";
        for (const ToleranceCurve& curve : curves) {
            for (const auto& point : curve.points) {
                out << fmt9(curve.delta) << "," << fmt9(point.p_inc) << ",";
                if (point.r_min) {
                    out << fmt9(*point.r_min);
                }
                out << "\n";
            }
        }
        return out.str();
    }
    if (req.format != "svg") {
        throw UsageError("unknown format: " + req.format);
    }

    const char* palette[] = {"#7b2d8b", "#1d7a33", "#b35a00", "#00567a", "#8a8a00", "#a01040"};
    std::vector<SvgCurve> svg_curves;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        SvgCurve segment;
        segment.label = "delta=" + fmt9(curves[i].delta);
        segment.color = palette[i % 6];
        bool labelled = false;
        for (const auto& point : curves[i].points) {
            if (point.r_min) {
                segment.points.emplace_back(point.p_inc, *point.r_min);
            } else if (!segment.points.empty()) {
                svg_curves.push_back(segment);
                labelled = true;
                segment.points.clear();
                segment.label.clear();
            }
        }
        if (!segment.points.empty() || !labelled) {
            svg_curves.push_back(segment);
        }
    }
    return render_svg_plot("Minimum tolerable r_s for witnessing contextuality", "p_inc", "r_min",
                           svg_curves);
}

std::string test_report(const TestRequest& req) {
    require_unit(req.delta_bound, "delta-bound");
    double p_suc = req.p_suc;
    double p_err = req.p_err;
    double p_inc = req.p_inc;
    if (p_suc < 0.0 || p_err < 0.0 || p_inc < 0.0) {
        throw UsageError("probabilities must be non-negative");
    }
    const double sum = p_suc + p_err + p_inc;
    if (std::abs(sum - 1.0) > 1e-9) {
        if (!req.renormalize) {
            throw UsageError("statistics sum to " + fmt9(sum) +
                             ", not 1; pass --renormalize to rescale");
        }
        if (sum <= 0.0) {
            throw UsageError("statistics sum to zero; nothing to renormalize");
        }
        p_suc /= sum;
        p_err /= sum;
        p_inc /= sum;
    }

    const OutcomeStats stats{p_suc, p_err, p_inc};
    const WitnessVerdict verdict = is_contextual(stats, req.delta_bound);

    ordered_json j;
    j["schema_version"] = 1;
    j["p_suc"] = round9(p_suc);
    j["p_err"] = round9(p_err);
    j["p_inc"] = round9(p_inc);
    j["delta_lower_bound"] = round9(req.delta_bound);
    j["w_observed"] = round9(verdict.w_observed);
    j["w_star"] = round9(verdict.w_star);
    j["margin"] = round9(verdict.margin);
    j["contextual"] = verdict.contextual;
    return j.dump(2) + "\n";
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Bounds, oracles and contextuality verdicts for two-state discrimination"};
    app.require_subcommand(1);

    std::string output;

    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds at one parameter point");
    BoundsRequest bounds_req;
    bounds->add_option("--delta", bounds_req.delta, "State overlap")->required();
    bounds->add_option("--rs", bounds_req.r_s, "Noise parameter (default 1)");
    bounds->add_option("--pinc", bounds_req.p_inc, "Inconclusive rate (default 0)");
    bounds->add_option("--output", output, "Output path (default stdout)");
    bounds->set_config("--config");

    auto* verify = app.add_subcommand("verify", "Closed forms vs independent oracles");
    VerifyRequest verify_req;
    verify->add_option("--grid", verify_req.grid, "Sweep resolution per axis (default 400)");
    verify->add_option("--seed", verify_req.seed, "Seed for the full-sphere spot checks");
    verify->add_option("--offplane-samples", verify_req.offplane_samples,
                       "Random directions per spot check");
    verify->add_option("--debug-wq-bias", verify_req.wq_bias, "")->group("");
    verify->add_option("--debug-wnc-bias", verify_req.wnc_bias, "")->group("");
    verify->add_option("--output", output, "Output path (default stdout)");
    verify->set_config("--config");

    auto* region = app.add_subcommand("region", "Feasible-region boundary curves");
    RegionRequest region_req;
    region->add_option("--model", region_req.model, "quantum | noncontextual | both")->required();
    region->add_option("--delta", region_req.delta, "Overlap (quantum / both)");
    region->add_option("--c", region_req.c, "Confusability (noncontextual)");
    region->add_option("--rs", region_req.r_s, "Noise parameter (default 1)");
    region->add_option("--points", region_req.n_points, "Grid points along p_inc (default 201)");
    region->add_option("--format", region_req.format, "csv | svg (default csv)");
    region->add_option("--output", output, "Output path (default stdout)");
    region->set_config("--config");

    auto* tolerance = app.add_subcommand("tolerance", "Noise-tolerance curves r_min(p_inc)");
    ToleranceRequest tol_req;
    tolerance->add_option("--delta", tol_req.deltas, "Overlap (repeatable)")->required();
    tolerance->add_option("--pinc-max", tol_req.pinc_max, "Largest p_inc (default 1)");
    tolerance->add_option("--pinc-step", tol_req.pinc_step, "Grid step (default 0.02)");
    tolerance->add_option("--format", tol_req.format, "csv | svg (default csv)");
    tolerance->add_option("--output", output, "Output path (default stdout)");
    tolerance->set_config("--config");

    auto* test = app.add_subcommand("test", "Contextuality verdict for observed statistics");
    TestRequest test_req;
    test->add_option("--psuc", test_req.p_suc, "Success probability")->required();
    test->add_option("--perr", test_req.p_err, "Error probability")->required();
    test->add_option("--pinc", test_req.p_inc, "Inconclusive probability")->required();
    test->add_option("--delta-bound", test_req.delta_bound, "Lower bound on the overlap")
        ->required();
    test->add_flag("--renormalize", test_req.renormalize,
                   "Rescale statistics that do not sum to 1");
    test->add_option("--output", output, "Output path (default stdout)");
    test->set_config("--config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) {
            write_output(bounds_report(bounds_req), output);
        } else if (verify->parsed()) {
            const VerifyReport report = run_verify(verify_req);
            write_output(report.json, output);
            if (!report.ok) {
                for (const std::string& failure : report.failures) {
                    std::cerr << "discrepancy: " << failure << "\n";
                }
                return 1;
            }
        } else if (region->parsed()) {
            write_output(region_output(region_req), output);
        } else if (tolerance->parsed()) {
            write_output(tolerance_output(tol_req), output);
        } else if (test->parsed()) {
            write_output(test_report(test_req), output);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DiscrepancyError& e) {
        std::cerr << "discrepancy: " << e.what() << " (closed form " << fmt9(e.closed_form)
                  << ", oracle " << fmt9(e.oracle) << ")\n";
        return 1;
    }
    return 0;
}

}  // namespace ctxwit::cli

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctxwit/region.hpp"

namespace ctxwit::cli {

/// Bad flag values or inconsistent inputs: exit code 2.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Unwritable output path: exit code 3.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct BoundsRequest {
    double delta = 0.0;
    double r_s = 1.0;
    double p_inc = 0.0;
};

/// JSON report with both models' optima, the noncontextual bound and the
/// contextual gap at the given point.
std::string bounds_report(const BoundsRequest& req);

struct VerifyRequest {
    int grid = 400;  // sweep resolution per axis
    std::uint64_t seed = 1;
    int offplane_samples = 200;
    // Test-only biases added to the closed forms before comparison, so the
    // discrepancy path can be exercised end to end.
    double wq_bias = 0.0;
    double wnc_bias = 0.0;
};

struct VerifyReport {
    double max_quantum_gap = 0.0;
    double max_lp_gap = 0.0;
    double max_offplane_excess = 0.0;
    bool ok = false;
    std::vector<std::string> failures;
    std::string json;
};

/// Sweeps the quantum oracle over the standard grid (9 overlaps x 3 noise
/// levels x 10 inconclusive rates) and the LP oracle over the standard
/// noncontextual grid (21 x 11 x 21), plus seeded full-sphere spot checks.
/// ok iff the quantum gap stays within 1e-4 and the LP gap within 1e-9.
VerifyReport run_verify(const VerifyRequest& req);

struct RegionRequest {
    std::string model;  // "quantum", "noncontextual" or "both" (svg only)
    double delta = -1.0;
    double c = -1.0;
    double r_s = 1.0;
    int n_points = 201;
    std::string format = "csv";
};

std::string region_csv(const RegionCurve& curve);
std::string region_output(const RegionRequest& req);

struct ToleranceRequest {
    std::vector<double> deltas;
    double pinc_max = 1.0;
    double pinc_step = 0.02;
    std::string format = "csv";
};

std::string tolerance_output(const ToleranceRequest& req);

struct TestRequest {
    double p_suc = 0.0;
    double p_err = 0.0;
    double p_inc = 0.0;
    double delta_bound = 0.0;
    bool renormalize = false;
};

/// JSON contextuality verdict for user-supplied statistics.
std::string test_report(const TestRequest& req);

/// Full command-line entry point. Exit codes: 0 success, 1 verification
/// discrepancy, 2 usage, 3 I/O.
int run(int argc, const char* const* argv);

}  // namespace ctxwit::cli

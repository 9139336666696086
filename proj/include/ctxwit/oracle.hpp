#pragma once

#include <cstdint>
#include <vector>

#include "ctxwit/quantum.hpp"

namespace ctxwit {

/// Grid for the brute-force sweep over inconclusive POVM elements.
struct SweepConfig {
    int theta_steps = 400;      // direction angle in the X-Z plane, [0, 2*pi)
    int magnitude_steps = 400;  // Bloch-vector length, [0, 1]
    std::uint64_t seed = 0;     // for the randomized full-sphere spot checks
    double tolerance = 1e-9;

    void validate() const;
};

struct OracleResult {
    double value = 0.0;
    Povm3 povm;
    OutcomeStats stats;
    long grid_points_feasible = 0;
};

/// Brute-force maximisation of the witness at fixed p_inc, independent of
/// the closed forms: propose the inconclusive element on a (theta, m) grid
/// in the X-Z plane with its weight solved from the p_inc constraint, then
/// split the remaining operator budget exactly with psd_split_max. The grid
/// maximum never exceeds the closed form, and with >= 200 steps per axis the
/// gap stays below 1e-4. Ties are broken towards the smallest grid index.
/// p_inc = 0 is the single feasible point (zero inconclusive element).
OracleResult sweep_witness_max(const ScenarioParams& params, const SweepConfig& cfg);

/// Randomized full-sphere proposals for the inconclusive element (seeded,
/// reproducible). Returns the best witness value found; used to confirm that
/// the planar sweep loses nothing.
double offplane_spot_max(const ScenarioParams& params, const SweepConfig& cfg, int samples);

/// `count` behaviours from uniformly random valid three-outcome POVMs
/// (random Bloch directions over the full sphere, random weights,
/// symmetrized to completeness). The sampled p_inc values are not
/// constrained to params.p_inc; samples explore the whole feasible region.
std::vector<OutcomeStats> sample_feasible_stats(const ScenarioParams& params, int count,
                                                std::uint64_t seed);

}  // namespace ctxwit

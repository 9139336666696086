#include "ctxwit/oracle.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

namespace ctxwit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 random_unit_vector(std::mt19937_64& rng) {
    const double z = 1.0 - 2.0 * uniform01(rng);
    const double phi = kTwoPi * uniform01(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

struct Evaluation {
    double value;
    Povm3 povm;
};

/// Propose inc = alpha (I + m * dir.sigma) with alpha solved from the
/// p_inc constraint; returns nothing when the element is infeasible
/// (inc > I). The witness is half the exact inner split objective.
std::optional<Evaluation> evaluate_direction(const Hermitian2& rho0, const Hermitian2& rho1,
                                             double p_inc, const Vec3& dir, double m) {
    const Hermitian2 avg = (rho0 + rho1) * 0.5;
    // Tr[avg * (I + m dir.sigma)] = 1 + m * dir . (avg Bloch vector)
    const double denom = 1.0 + m * dir.dot(avg.n);
    if (denom <= 1e-14) {
        return std::nullopt;
    }
    const double alpha = p_inc / denom;
    const Hermitian2 inc{2.0 * alpha, dir * (2.0 * alpha * m)};
    if (alpha * (1.0 + m) > 1.0 + kPsdTol) {
        return std::nullopt;  // largest eigenvalue exceeds 1
    }
    const Hermitian2 remainder = Hermitian2::identity() - inc;
    const PsdSplit split = psd_split_max(remainder, (rho0 - rho1) * 0.5);
    return Evaluation{split.value / 2.0, Povm3{split.part0, split.part1, inc}};
}

}  // namespace

void SweepConfig::validate() const {
    if (theta_steps < 2 || magnitude_steps < 2) {
        throw PreconditionError("SweepConfig: theta_steps and magnitude_steps must be >= 2");
    }
    if (!(tolerance > 0.0)) {
        throw PreconditionError("SweepConfig: tolerance must be positive");
    }
}

OracleResult sweep_witness_max(const ScenarioParams& params, const SweepConfig& cfg) {
    params.validate();
    cfg.validate();
    const auto [rho0, rho1] = make_states(params);

    OracleResult best;
    best.value = -1.0;

    if (params.p_inc == 0.0) {
        const auto eval = evaluate_direction(rho0, rho1, 0.0, {0.0, 0.0, 1.0}, 0.0);
        best.value = eval->value;
        best.povm = eval->povm;
        best.grid_points_feasible = 1;
    } else {
        for (int j = 0; j < cfg.theta_steps; ++j) {
            const double theta = kTwoPi * j / cfg.theta_steps;
            const Vec3 dir{std::sin(theta), 0.0, std::cos(theta)};
            for (int i = 0; i < cfg.magnitude_steps; ++i) {
                const double m = static_cast<double>(i) / (cfg.magnitude_steps - 1);
                const auto eval = evaluate_direction(rho0, rho1, params.p_inc, dir, m);
                if (!eval) {
                    continue;
                }
                ++best.grid_points_feasible;
                if (eval->value > best.value) {
                    best.value = eval->value;
                    best.povm = eval->povm;
                }
            }
        }
    }

    if (best.grid_points_feasible == 0) {
        throw InfeasibleSweepError(
            "sweep_witness_max: no grid point satisfies the inconclusive-rate constraint");
    }
    best.stats = measure_stats(rho0, rho1, best.povm);
    return best;
}

double offplane_spot_max(const ScenarioParams& params, const SweepConfig& cfg, int samples) {
    params.validate();
    cfg.validate();
    const auto [rho0, rho1] = make_states(params);
    std::mt19937_64 rng(cfg.seed);

    double best = -1.0;
    for (int k = 0; k < samples; ++k) {
        const Vec3 dir = random_unit_vector(rng);
        const double m = uniform01(rng);
        const auto eval = evaluate_direction(rho0, rho1, params.p_inc, dir, m);
        if (eval && eval->value > best) {
            best = eval->value;
        }
    }
    return best;
}

std::vector<OutcomeStats> sample_feasible_stats(const ScenarioParams& params, int count,
                                                std::uint64_t seed) {
    params.validate();
    if (count < 1) {
        throw PreconditionError("sample_feasible_stats: count must be >= 1");
    }
    const auto [rho0, rho1] = make_states(params);
    std::mt19937_64 rng(seed);

    std::vector<OutcomeStats> samples;
    samples.reserve(static_cast<std::size_t>(count));
    while (samples.size() < static_cast<std::size_t>(count)) {
        // Weights uniform on the simplex via sorted uniforms.
        double u = uniform01(rng);
        double v = uniform01(rng);
        if (u > v) {
            std::swap(u, v);
        }
        const double w[3] = {u, v - u, 1.0 - v};

        // Raw elements w_b (I + m_b dir_b . sigma), then symmetrize to a
        // genuine POVM: pi_b = G^{-1/2} E_b G^{-1/2} with G their sum.
        Hermitian2 raw[3];
        Vec3 total;
        for (int b = 0; b < 3; ++b) {
            const Vec3 dir = random_unit_vector(rng);
            const double m = uniform01(rng);
            raw[b] = {2.0 * w[b], dir * (2.0 * w[b] * m)};
            total = total + raw[b].n * 0.5;
        }
        const double t = total.norm();
        if (t >= 1.0 - 1e-9) {
            continue;  // sum is singular; draw again
        }
        const double fhi = 1.0 / std::sqrt(1.0 + t);
        const double flo = 1.0 / std::sqrt(1.0 - t);
        const Vec3 axis = t > 0.0 ? total * (1.0 / t) : Vec3{};
        const Hermitian2 inv_root{fhi + flo, axis * (fhi - flo)};

        Povm3 povm{sandwich(inv_root, raw[0]), sandwich(inv_root, raw[1]),
                   sandwich(inv_root, raw[2])};
        samples.push_back(measure_stats(rho0, rho1, povm));
    }
    return samples;
}

}  // namespace ctxwit

#pragma once

#include <array>
#include <cmath>

#include "ctxwit/errors.hpp"

namespace ctxwit {

/// Absolute tolerance on operator eigenvalues and completeness residuals.
inline constexpr double kPsdTol = 1e-10;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
};

/// 2x2 Hermitian operator stored as four real coefficients:
///   matrix = (tr * I + n.x * X + n.y * Y + n.z * Z) / 2.
/// Hermiticity is structural; the trace equals `tr`; the operator is PSD
/// iff tr >= 0 and |n| <= tr.
struct Hermitian2 {
    double tr = 0.0;
    Vec3 n;

    static Hermitian2 zero() { return {}; }
    static Hermitian2 identity() { return {2.0, {}}; }

    Hermitian2 operator+(const Hermitian2& o) const { return {tr + o.tr, n + o.n}; }
    Hermitian2 operator-(const Hermitian2& o) const { return {tr - o.tr, n - o.n}; }
    Hermitian2 operator*(double s) const { return {tr * s, n * s}; }

    /// Eigenvalues in descending order: (tr +- |n|) / 2.
    std::array<double, 2> eigenvalues() const {
        const double r = n.norm();
        return {(tr + r) / 2.0, (tr - r) / 2.0};
    }

    bool is_psd(double tol = kPsdTol) const { return eigenvalues()[1] >= -tol; }

    /// Traceless part (the identity component removed).
    Hermitian2 traceless() const { return {0.0, n}; }
};

/// (t/2)(I + dir . sigma) in the coefficient encoding.
Hermitian2 bloch_operator(double t, const Vec3& dir);

/// Tr[AB] = (tr_A tr_B + n_A . n_B) / 2. Symmetric in its arguments.
double trace_product(const Hermitian2& a, const Hermitian2& b);

/// Eigenvalues of `a` in descending order.
std::array<double, 2> eigvals2(const Hermitian2& a);

/// A B A for Hermitian A, B (result is Hermitian, computed in coefficients).
Hermitian2 sandwich(const Hermitian2& a, const Hermitian2& b);

/// Operator square root of a PSD operator. Eigenvalues below zero (within
/// tol) are clamped to zero before the root is taken.
Hermitian2 sqrt_psd(const Hermitian2& m, double tol = kPsdTol);

/// Three-outcome qubit measurement with outcomes {0, 1, inconclusive}.
struct Povm3 {
    Hermitian2 out0;
    Hermitian2 out1;
    Hermitian2 inc;

    /// Each element PSD and the three sum to the identity, within tol on
    /// every coefficient.
    bool is_valid(double tol = kPsdTol) const;
};

struct PsdSplit {
    double value = 0.0;
    Hermitian2 part0;
    Hermitian2 part1;
};

/// Maximises Tr[D (part0 - part1)] over decompositions part0 + part1 = M
/// with both parts PSD. The maximum is the trace norm of M^{1/2} D M^{1/2},
/// attained by splitting along its positive/negative eigenspaces and
/// conjugating back by M^{1/2}. Only the traceless part of D enters: the
/// identity component of D is discarded, so both the value and the parts
/// are invariant under D -> D + c*I. On the null space of M both parts
/// vanish. Throws PreconditionError when M is not PSD within tol.
PsdSplit psd_split_max(const Hermitian2& m, const Hermitian2& d, double tol = kPsdTol);

}  // namespace ctxwit

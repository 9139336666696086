#include "ctxwit/qubit.hpp"

#include <algorithm>

namespace ctxwit {

Hermitian2 bloch_operator(double t, const Vec3& dir) {
    return {t, dir * t};
}

double trace_product(const Hermitian2& a, const Hermitian2& b) {
    return (a.tr * b.tr + a.n.dot(b.n)) / 2.0;
}

std::array<double, 2> eigvals2(const Hermitian2& a) {
    return a.eigenvalues();
}

Hermitian2 sandwich(const Hermitian2& a, const Hermitian2& b) {
    // Work with half-coefficients: A = a0 I + av.sigma, B = b0 I + bv.sigma.
    // A B A = [b0 (a0^2 + |av|^2) + 2 a0 (av.bv)] I
    //       + [2 (av.bv) av + (a0^2 - |av|^2) bv + 2 a0 b0 av] . sigma.
    // The cross terms that would make the product non-Hermitian cancel.
    const double a0 = a.tr / 2.0;
    const Vec3 av = a.n * 0.5;
    const double b0 = b.tr / 2.0;
    const Vec3 bv = b.n * 0.5;

    const double ab = av.dot(bv);
    const double a2 = av.dot(av);
    const double e0 = b0 * (a0 * a0 + a2) + 2.0 * a0 * ab;
    const Vec3 ev = av * (2.0 * ab) + bv * (a0 * a0 - a2) + av * (2.0 * a0 * b0);
    return {2.0 * e0, ev * 2.0};
}

Hermitian2 sqrt_psd(const Hermitian2& m, double tol) {
    if (!m.is_psd(tol)) {
        throw PreconditionError("sqrt_psd: operator not PSD within tolerance");
    }
    const auto ev = m.eigenvalues();
    const double hi = std::sqrt(std::max(0.0, ev[0]));
    const double lo = std::sqrt(std::max(0.0, ev[1]));
    const double r = m.n.norm();
    const Vec3 axis = r > 0.0 ? m.n * (1.0 / r) : Vec3{};
    return {hi + lo, axis * (hi - lo)};
}

bool Povm3::is_valid(double tol) const {
    for (const Hermitian2* e : {&out0, &out1, &inc}) {
        if (!e->is_psd(tol)) {
            return false;
        }
    }
    const Hermitian2 sum = out0 + out1 + inc;
    return std::abs(sum.tr - 2.0) <= tol && std::abs(sum.n.x) <= tol &&
           std::abs(sum.n.y) <= tol && std::abs(sum.n.z) <= tol;
}

PsdSplit psd_split_max(const Hermitian2& m, const Hermitian2& d, double tol) {
    if (!m.is_psd(tol)) {
        throw PreconditionError("psd_split_max: M not PSD within tolerance");
    }
    const Hermitian2 root = sqrt_psd(m, tol);
    const Hermitian2 c = sandwich(root, d.traceless());
    const auto ev = c.eigenvalues();

    PsdSplit split;
    split.value = std::abs(ev[0]) + std::abs(ev[1]);

    // sign(C), with sign(0) taken as +1; any choice on a zero eigenspace
    // attains the same value and keeps both parts PSD.
    const double shi = ev[0] >= 0.0 ? 1.0 : -1.0;
    const double slo = ev[1] >= 0.0 ? 1.0 : -1.0;
    const double r = c.n.norm();
    const Vec3 axis = r > 0.0 ? c.n * (1.0 / r) : Vec3{};
    const Hermitian2 sign_c{shi + slo, axis * (shi - slo)};

    const Hermitian2 s_opt = sandwich(root, sign_c);
    split.part0 = (m + s_opt) * 0.5;
    split.part1 = (m - s_opt) * 0.5;
    return split;
}

}  // namespace ctxwit

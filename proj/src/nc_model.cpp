#include "ctxwit/nc_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ctxwit {

namespace {

void check_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw PreconditionError(std::string(name) + " must lie in [0, 1]");
    }
}

constexpr std::array<std::array<bool, 4>, 4> kStandardPatterns{{
    {true, true, false, false},   // A
    {true, false, false, true},   // B
    {false, true, true, false},   // C
    {false, false, true, true},   // D
}};

std::vector<NcRegion> standard_regions(const OnticModel& model) {
    std::vector<NcRegion> regions(4);
    for (int r = 0; r < 4; ++r) {
        regions[r].mu0 = model.mu0_noisy[r];
        regions[r].mu1 = model.mu1_noisy[r];
        regions[r].in_support = kStandardPatterns[r];
    }
    return regions;
}

/// Row-reduces the equality system in place and returns the pivot column of
/// each eliminated row; rows below the returned rank are (numerically) zero.
int row_reduce(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows > 0 ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        double best = 1e-12;
        for (int r = rank; r < rows; ++r) {
            if (std::abs(a[r][col]) > best) {
                best = std::abs(a[r][col]);
                pivot = r;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0.0) {
                continue;
            }
            const double f = a[r][col] / a[rank][col];
            for (int c = 0; c < cols; ++c) {
                a[r][c] -= f * a[rank][c];
            }
            b[r] -= f * b[rank];
        }
        ++rank;
    }
    return rank;
}

bool solve_square(std::vector<std::vector<double>> m, std::vector<double> rhs,
                  std::vector<double>& out) {
    const int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(m[pivot][col]) < 1e-10) {
            return false;
        }
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col) {
                continue;
            }
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    out.resize(n);
    for (int i = 0; i < n; ++i) {
        out[i] = rhs[i] / m[i][i];
    }
    return true;
}

struct LpSystem {
    // 12 mixing weights w[b][s], flattened as b*4+s for outcomes b in
    // {0, 1, inc} and support tests s in {S0, S1, S0c, S1c}.
    std::vector<std::vector<double>> eq;   // full equality matrix
    std::vector<double> rhs;               // full right-hand side
    std::vector<std::vector<double>> red;  // independent rows only
    std::vector<double> red_rhs;
    int rank = 0;
};

LpSystem build_system(const std::vector<NcRegion>& regions, double p_inc) {
    const int nr = static_cast<int>(regions.size());
    LpSystem sys;
    sys.eq.assign(nr + 1, std::vector<double>(12, 0.0));
    sys.rhs.assign(nr + 1, 0.0);
    for (int r = 0; r < nr; ++r) {
        for (int b = 0; b < 3; ++b) {
            for (int s = 0; s < 4; ++s) {
                if (regions[r].in_support[s]) {
                    sys.eq[r][b * 4 + s] = 1.0;
                }
            }
        }
        sys.rhs[r] = 1.0;
    }
    for (int s = 0; s < 4; ++s) {
        double coeff = 0.0;
        for (const NcRegion& reg : regions) {
            if (reg.in_support[s]) {
                coeff += (reg.mu0 + reg.mu1) / 2.0;
            }
        }
        sys.eq[nr][2 * 4 + s] = coeff;
    }
    sys.rhs[nr] = p_inc;

    sys.red = sys.eq;
    sys.red_rhs = sys.rhs;
    sys.rank = row_reduce(sys.red, sys.red_rhs);
    sys.red.resize(sys.rank);
    sys.red_rhs.resize(sys.rank);
    return sys;
}

double witness_of(const std::vector<NcRegion>& regions,
                  const std::vector<std::array<double, 3>>& xi) {
    double p_suc = 0.0;
    double p_err = 0.0;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        p_suc += 0.5 * (regions[r].mu0 * xi[r][0] + regions[r].mu1 * xi[r][1]);
        p_err += 0.5 * (regions[r].mu0 * xi[r][1] + regions[r].mu1 * xi[r][0]);
    }
    return (p_suc - p_err) / 2.0;
}

std::vector<std::array<double, 3>> expand_xi(const std::vector<NcRegion>& regions,
                                             const std::array<double, 12>& w) {
    std::vector<std::array<double, 3>> xi(regions.size());
    for (std::size_t r = 0; r < regions.size(); ++r) {
        for (int b = 0; b < 3; ++b) {
            double v = 0.0;
            for (int s = 0; s < 4; ++s) {
                if (regions[r].in_support[s]) {
                    v += w[b * 4 + s];
                }
            }
            xi[r][b] = std::max(0.0, v);
        }
    }
    return xi;
}

/// Visits every basic feasible solution of {w >= 0, eq w = rhs}.
template <typename Visit>
void enumerate_vertices(const LpSystem& sys, Visit visit) {
    const int k = sys.rank;
    if (k == 0) {
        return;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) {
        idx[i] = i;
    }
    std::vector<std::vector<double>> basis(k, std::vector<double>(k));
    std::vector<double> sol;
    while (true) {
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) {
                basis[r][c] = sys.red[r][idx[c]];
            }
        }
        if (solve_square(basis, sys.red_rhs, sol)) {
            bool feasible = true;
            for (double v : sol) {
                if (v < -1e-11) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                std::array<double, 12> w{};
                for (int i = 0; i < k; ++i) {
                    w[idx[i]] = std::max(0.0, sol[i]);
                }
                // Guard against bases that solve the reduced system but not
                // the full one (possible only under numerical degeneracy).
                bool consistent = true;
                for (std::size_t r = 0; r < sys.eq.size(); ++r) {
                    double acc = -sys.rhs[r];
                    for (int c = 0; c < 12; ++c) {
                        acc += sys.eq[r][c] * w[c];
                    }
                    if (std::abs(acc) > 1e-9) {
                        consistent = false;
                        break;
                    }
                }
                if (consistent) {
                    visit(w);
                }
            }
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == 12 - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

std::array<double, 4> OnticModel::average() const {
    std::array<double, 4> avg{};
    for (int r = 0; r < 4; ++r) {
        avg[r] = (mu0_noisy[r] + mu1_noisy[r]) / 2.0;
    }
    return avg;
}

OnticModel make_ontic_model(double c, double r_s) {
    check_unit_interval(c, "c");
    check_unit_interval(r_s, "r_s");
    OnticModel model;
    model.c = c;
    model.r_s = r_s;
    model.mu0_noisy = {c * (1.0 + r_s) / 2.0, (1.0 - c) * (1.0 + r_s) / 2.0,
                       (1.0 - c) * (1.0 - r_s) / 2.0, c * (1.0 - r_s) / 2.0};
    model.mu1_noisy = {c * (1.0 + r_s) / 2.0, (1.0 - c) * (1.0 - r_s) / 2.0,
                       (1.0 - c) * (1.0 + r_s) / 2.0, c * (1.0 - r_s) / 2.0};
    return model;
}

bool ResponseFunction::is_valid(double tol) const {
    for (int r = 0; r < 4; ++r) {
        double sum = 0.0;
        for (int b = 0; b < 3; ++b) {
            if (xi[b][r] < -tol) {
                return false;
            }
            sum += xi[b][r];
        }
        if (std::abs(sum - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

OutcomeStats stats_from_response(const OnticModel& model, const ResponseFunction& rf) {
    OutcomeStats stats;
    for (int r = 0; r < 4; ++r) {
        stats.p_suc += 0.5 * (model.mu0_noisy[r] * rf.xi[0][r] + model.mu1_noisy[r] * rf.xi[1][r]);
        stats.p_err += 0.5 * (model.mu0_noisy[r] * rf.xi[1][r] + model.mu1_noisy[r] * rf.xi[0][r]);
        stats.p_inc += 0.5 * (model.mu0_noisy[r] * rf.xi[2][r] + model.mu1_noisy[r] * rf.xi[2][r]);
    }
    return stats;
}

Branch nc_branch(double c, double r_s, double p_inc) {
    return p_inc <= (1.0 + r_s * c) / 2.0 ? Branch::low_pinc : Branch::high_pinc;
}

double nc_witness_max(double c, double r_s, double p_inc) {
    check_unit_interval(c, "c");
    check_unit_interval(r_s, "r_s");
    check_unit_interval(p_inc, "p_inc");
    if (nc_branch(c, r_s, p_inc) == Branch::low_pinc) {
        return (r_s / 2.0) * (1.0 - c) * (1.0 - p_inc / (1.0 + r_s * c));
    }
    const double den = 1.0 - r_s * c;
    if (den <= 0.0) {
        return 0.0;  // c = r_s = 1: identical states
    }
    return 0.5 * (1.0 - p_inc) * r_s * (1.0 - c) / den;
}

OutcomeStats nc_optimal_stats(double c, double r_s, double p_inc) {
    check_unit_interval(c, "c");
    check_unit_interval(r_s, "r_s");
    check_unit_interval(p_inc, "p_inc");
    OutcomeStats stats;
    stats.p_inc = p_inc;
    if (nc_branch(c, r_s, p_inc) == Branch::low_pinc) {
        stats.p_suc = ((1.0 + r_s) / 2.0) * (1.0 - p_inc / (1.0 + r_s * c)) - r_s * c / 2.0;
        stats.p_err = 1.0 - stats.p_suc - p_inc;
    } else {
        const double w = nc_witness_max(c, r_s, p_inc);
        stats.p_err = 0.5 * (1.0 - p_inc) - w;
        if (stats.p_err < 0.0 && stats.p_err > -1e-12) {
            stats.p_err = 0.0;
        }
        stats.p_suc = 1.0 - p_inc - stats.p_err;
    }
    return stats;
}

namespace detail {

ResponseFunction response_low_pinc(double a, double b) {
    ResponseFunction rf;
    rf.xi[0] = {a - b, a, 0.0, b};
    rf.xi[1] = {a - b, 0.0, a, b};
    for (int r = 0; r < 4; ++r) {
        rf.xi[2][r] = 1.0 - rf.xi[0][r] - rf.xi[1][r];
    }
    return rf;
}

ResponseFunction response_high_pinc(double q) {
    return response_low_pinc(q, q);
}

}  // namespace detail

ResponseFunction nc_optimal_response(double c, double r_s, double p_inc) {
    check_unit_interval(c, "c");
    check_unit_interval(r_s, "r_s");
    check_unit_interval(p_inc, "p_inc");

    ResponseFunction rf;
    if (nc_branch(c, r_s, p_inc) == Branch::low_pinc) {
        const double a = 1.0 - p_inc / (1.0 + r_s * c);
        rf = detail::response_low_pinc(a, 0.5);
    } else {
        const double den = 1.0 - r_s * c;
        if (den <= 0.0) {
            // c = r_s = 1 forces p_inc = 1: everything inconclusive.
            rf.xi[2] = {1.0, 1.0, 1.0, 1.0};
        } else {
            rf = detail::response_high_pinc((1.0 - p_inc) / den);
        }
    }

    if (!rf.is_valid(1e-12)) {
        throw ConsistencyError("nc_optimal_response: response-function validity check failed");
    }
    const OnticModel model = make_ontic_model(c, r_s);
    const OutcomeStats achieved = stats_from_response(model, rf);
    const OutcomeStats expected = nc_optimal_stats(c, r_s, p_inc);
    if (std::abs(achieved.p_suc - expected.p_suc) > 1e-12 ||
        std::abs(achieved.p_err - expected.p_err) > 1e-12) {
        throw ConsistencyError("nc_optimal_response: achieved-statistics check failed");
    }
    if (std::abs(achieved.p_inc - p_inc) > 1e-12) {
        throw ConsistencyError("nc_optimal_response: inconclusive-rate check failed");
    }
    return rf;
}

double nc_max_confidence(double c, double r_s, double p_inc) {
    if (p_inc >= 1.0) {
        throw UndefinedConfidenceError("nc_max_confidence undefined at p_inc = 1");
    }
    return confidence(nc_optimal_stats(c, r_s, p_inc));
}

NcLpResult nc_lp_witness_max(const std::vector<NcRegion>& regions, double p_inc) {
    check_unit_interval(p_inc, "p_inc");
    if (regions.empty()) {
        throw PreconditionError("nc_lp_witness_max: no regions");
    }
    const LpSystem sys = build_system(regions, p_inc);

    NcLpResult best;
    bool found = false;
    enumerate_vertices(sys, [&](const std::array<double, 12>& w) {
        auto xi = expand_xi(regions, w);
        const double value = witness_of(regions, xi);
        if (!found || value > best.value) {
            found = true;
            best.value = value;
            best.xi = std::move(xi);
        }
    });
    if (!found) {
        throw PreconditionError("nc_lp_witness_max: infeasible instance");
    }
    return best;
}

LpSolution lp_oracle(double c, double r_s, double p_inc) {
    const OnticModel model = make_ontic_model(c, r_s);
    const NcLpResult lp = nc_lp_witness_max(standard_regions(model), p_inc);
    const double closed = nc_witness_max(c, r_s, p_inc);
    if (std::abs(lp.value - closed) > 1e-9) {
        throw DiscrepancyError("lp_oracle: closed form and LP disagree", closed, lp.value);
    }
    LpSolution sol;
    sol.value = lp.value;
    for (int r = 0; r < 4; ++r) {
        for (int b = 0; b < 3; ++b) {
            sol.xi.xi[b][r] = lp.xi[r][b];
        }
    }
    return sol;
}

std::vector<ResponseFunction> response_polytope_vertices(const OnticModel& model) {
    // Same weight polytope, without the inconclusive-rate hyperplane.
    std::vector<NcRegion> regions = standard_regions(model);
    LpSystem sys = build_system(regions, 0.0);
    sys.eq.pop_back();
    sys.rhs.pop_back();
    sys.red = sys.eq;
    sys.red_rhs = sys.rhs;
    sys.rank = row_reduce(sys.red, sys.red_rhs);
    sys.red.resize(sys.rank);
    sys.red_rhs.resize(sys.rank);

    std::vector<ResponseFunction> vertices;
    enumerate_vertices(sys, [&](const std::array<double, 12>& w) {
        const auto xi = expand_xi(regions, w);
        ResponseFunction rf;
        for (int r = 0; r < 4; ++r) {
            for (int b = 0; b < 3; ++b) {
                rf.xi[b][r] = xi[r][b];
            }
        }
        for (const ResponseFunction& seen : vertices) {
            double diff = 0.0;
            for (int b = 0; b < 3; ++b) {
                for (int r = 0; r < 4; ++r) {
                    diff = std::max(diff, std::abs(seen.xi[b][r] - rf.xi[b][r]));
                }
            }
            if (diff < 1e-9) {
                return;
            }
        }
        vertices.push_back(rf);
    });
    return vertices;
}

}  // namespace ctxwit

#include "specmatch/verify.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <vector>

#include "specmatch/diagnostics.hpp"
#include "specmatch/models.hpp"
#include "specmatch/rng.hpp"
#include "specmatch/rounding.hpp"
#include "specmatch/similarity.hpp"
#include "specmatch/spectral.hpp"

namespace specmatch {

namespace {

Mat random_sym(int n, uint64_t seed, double scale) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto [g, _] = rng::normal_pair(rng::entry_key(seed, 0x73, i, j),
                                                 rng::entry_key(seed, 0x74, i, j));
            m(i, j) = m(j, i) = g * scale;
        }
    return m;
}

Mat zero_out(const Mat& a, const std::vector<int>& rows) {
    Mat m = a;
    for (int r : rows) {
        m.row(r).setZero();
        m.col(r).setZero();
    }
    return m;
}

struct Check {
    std::string name;
    double residual;
    double tolerance;
    bool pass() const { return residual <= tolerance; }
};

double schur_residuals(const Mat& a, Complex z) {
    const int n = static_cast<int>(a.rows());
    const CMat r = resolvent(a, z);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const CMat rj = resolvent(zero_out(a, {j}), z);
        // 1/R_jj = a_jj - z - sum_{k,l != j} a_jk R^(j)_kl a_lj
        Complex quad = 0.0;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                quad += a(j, k) * rj(k, l) * a(l, j);
            }
        }
        worst = std::max(worst, std::abs(1.0 / r(j, j) - (a(j, j) - z - quad)));
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            // R_jk = -R_jj sum_{l != j} a_jl R^(j)_lk
            Complex sum1 = 0.0;
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                sum1 += a(j, l) * rj(l, k);
            }
            worst = std::max(worst, std::abs(r(j, k) + r(j, j) * sum1));
            // R_jk = R_jj R^(j)_kk (-a_jk + sum_{l,m != j,k} a_jl R^(jk)_lm a_mk)
            const CMat rjk = resolvent(zero_out(a, {j, k}), z);
            Complex sum2 = 0.0;
            for (int l = 0; l < n; ++l) {
                if (l == j || l == k) continue;
                for (int m = 0; m < n; ++m) {
                    if (m == j || m == k) continue;
                    sum2 += a(j, l) * rjk(l, m) * a(m, k);
                }
            }
            worst = std::max(worst,
                             std::abs(r(j, k) - r(j, j) * rj(k, k) * (-a(j, k) + sum2)));
            // e_k' R = e_k' R^(j) + (R_kj / R_jj) e_j' R
            for (int l = 0; l < n; ++l)
                worst = std::max(
                    worst, std::abs(r(k, l) - (rj(k, l) + r(k, j) / r(j, j) * r(j, l))));
            // 1/R_kk = 1/R^(j)_kk - R_kj^2 / (R^(j)_kk R_jj R_kk)
            const Complex lhs = 1.0 / r(k, k);
            const Complex rhs =
                1.0 / rj(k, k) - r(k, j) * r(k, j) / (rj(k, k) * r(j, j) * r(k, k));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double ward_residual(const Mat& a, Complex z) {
    const CMat r = resolvent(a, z);
    const CMat lhs = r * r.conjugate();
    const CMat rhs = r.imag().cast<Complex>() / z.imag();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

bool run_verify(std::ostream& out, const VerifyOptions& options) {
    std::vector<Check> checks;

    // Resolvent identities at small sizes.
    {
        double ward = 0.0, conj_sym = 0.0, schur = 0.0;
        for (int n = 3; n <= 8; ++n) {
            const Mat a = random_sym(n, 1000 + n, 1.0 / std::sqrt(n));
            const Complex z{1.0, 1.0};
            ward = std::max(ward, ward_residual(a, z));
            const CMat direct = resolvent(a, std::conj(z));
            const CMat conj = resolvent(a, z).conjugate();
            conj_sym = std::max(conj_sym, (direct - conj).cwiseAbs().maxCoeff());
            schur = std::max(schur, schur_residuals(a, z));
        }
        checks.push_back({"ward_identity", ward, 1e-9});
        checks.push_back({"conjugate_symmetry", conj_sym, 1e-10});
        checks.push_back({"schur_identities", schur, 1e-8});
    }

    // Stieltjes transform on a grid and at the boundary.
    {
        double quad = 0.0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double re = -3.0 + 6.0 * i / 9.0;
                const double im = 0.05 + 0.95 * j / 9.0;
                const Complex z{re, im};
                const Complex m = stieltjes_m0(z);
                quad = std::max(quad, std::abs(m * m + z * m + 1.0));
            }
        checks.push_back({"m0_quadratic_grid", quad, 1e-12});
        double boundary = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double x = -2.0 + 4.0 * i / 49.0;
            const Complex mp = m0_boundary(x, BoundarySide::plus);
            const Complex mm = m0_boundary(x, BoundarySide::minus);
            boundary = std::max(boundary, std::abs(std::abs(mp) - 1.0));
            boundary = std::max(boundary, std::abs(mp.imag() / std::numbers::pi -
                                                   semicircle_density(x)));
            boundary = std::max(boundary, std::abs(mm - std::conj(mp)));
        }
        checks.push_back({"m0_boundary", boundary, 1e-12});
    }

    // KKT oracles against the spectral formulas.
    {
        double cos_defect = 0.0, rowqp_diff = 0.0, rowsum = 0.0;
        const double etas[] = {0.1, 0.3, 1.0};
        for (int trial = 0; trial < 9; ++trial) {
            const int n = 3 + trial % 6;
            const double eta = etas[trial % 3];
            const Mat a = random_sym(n, 2000 + trial, 1.0 / std::sqrt(n));
            const Mat b = random_sym(n, 3000 + trial, 1.0 / std::sqrt(n));
            const SimilarityMatrix xg = grampa(a, b, eta);
            const SimilarityMatrix xo = kkt_oracle_regqp(a, b, eta);
            const double dot = (xg.entries.array() * xo.entries.array()).sum();
            cos_defect = std::max(
                cos_defect, 1.0 - dot / (xg.entries.norm() * xo.entries.norm()));
            const SimilarityMatrix xc = rowqp(a, b, eta);
            const SimilarityMatrix xk = kkt_oracle_rowqp(a, b, eta);
            rowqp_diff = std::max(rowqp_diff,
                                  (xc.entries - xk.entries).cwiseAbs().maxCoeff() /
                                      xc.entries.cwiseAbs().maxCoeff());
            rowsum = std::max(rowsum, (xc.entries.rowwise().sum().array() - 1.0)
                                          .abs()
                                          .maxCoeff());
        }
        checks.push_back({"kkt_regqp_cosine_defect", cos_defect, 1e-10});
        checks.push_back({"kkt_rowqp_match", rowqp_diff, 1e-8});
        checks.push_back({"rowqp_row_sums", rowsum, 1e-9});
    }

    // Hungarian vs brute force.
    {
        double gap = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 7;
            Mat m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m(i, j) = rng::uniform01(rng::entry_key(4000 + trial, 0x6d, i, j));
            SimilarityMatrix x;
            x.entries = m;
            x.method = Method::grampa;
            x.eta = 1.0;
            gap = std::max(gap, std::abs(objective_value(x, lap_round(x)) -
                                         objective_value(x, brute_force_round(x))));
        }
        checks.push_back({"lap_vs_brute_force", gap, 0.0});
    }

    // Contour representations against the direct formulas.
    {
        CorrelatedPair pair = gen_er_pair(20, 0.5, 0.9, 99, TruthMode::random);
        const double norm = std::max(spectral_norm(pair.a), spectral_norm(pair.b));
        if (norm > 2.4) {
            pair.a *= 2.4 / norm;
            pair.b *= 2.4 / norm;
        }
        const double eta = 0.3;
        ContourSpec spec = ContourSpec::make_default(eta);
        spec.points_per_side = 512;
        SimilarityMatrix xg = grampa(pair.a, pair.b, eta);
        SimilarityMatrix xgc = grampa_contour(pair.a, pair.b, eta, spec);
        if (options.inject_contour_sign_error) xgc.entries = -xgc.entries;
        const double gerr = (xg.entries - xgc.entries).cwiseAbs().maxCoeff() /
                            xg.entries.cwiseAbs().maxCoeff();
        checks.push_back({"grampa_contour", gerr, 1e-6});
        SimilarityMatrix xc = rowqp(pair.a, pair.b, eta);
        SimilarityMatrix xcc = rowqp_contour(pair.a, pair.b, eta, spec);
        if (options.inject_contour_sign_error) xcc.entries = -xcc.entries;
        const double cerr = (xc.entries - xcc.entries).cwiseAbs().maxCoeff() /
                            xc.entries.cwiseAbs().maxCoeff();
        checks.push_back({"rowqp_contour", cerr, 1e-5});
    }

    bool all_pass = true;
    out << std::left;
    for (const Check& check : checks) {
        const bool ok = check.pass();
        all_pass = all_pass && ok;
        out << (ok ? "PASS " : "FAIL ") << std::setw(28) << check.name
            << " residual=" << std::scientific << std::setprecision(3) << check.residual
            << " tol=" << check.tolerance << std::defaultfloat << '\n';
    }
    out << (all_pass ? "verify: all checks passed" : "verify: FAILURES present") << '\n';
    return all_pass;
}

}  // namespace specmatch

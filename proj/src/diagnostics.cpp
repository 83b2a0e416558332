#include "specmatch/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace specmatch {

DominanceReport dominance_report(const SimilarityMatrix& x, const Permutation& truth,
                                 double sigma, bool constrained) {
    const int n = x.n();
    if (truth.size() != n) throw DimensionError("dominance_report: truth size mismatch");
    if (sigma < 0.0 || sigma > 1.0) throw ParamError("dominance_report: sigma must be in [0,1]");

    const double scale = constrained ? static_cast<double>(n) : 1.0;
    double min_true = std::numeric_limits<double>::infinity();
    double max_off = -std::numeric_limits<double>::infinity();
    double diag_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const int t = truth(i);
        const double on = scale * x.entries(i, t);
        min_true = std::min(min_true, on);
        diag_sum += on;
        for (int j = 0; j < n; ++j) {
            if (j == t) continue;
            max_off = std::max(max_off, scale * x.entries(i, j));
        }
    }

    DominanceReport report;
    report.min_true = min_true;
    report.max_off = max_off;
    report.margin = min_true - max_off;  // +inf when n == 1
    report.separated = report.margin > 0.0;
    report.pred_diag = constrained ? 4.0 * (1.0 - sigma * sigma) / (std::numbers::pi * x.eta)
                                   : (1.0 - sigma * sigma) / x.eta;
    report.diag_mean = diag_sum / static_cast<double>(n);
    report.diag_rel_err = std::abs(report.diag_mean - report.pred_diag) / report.pred_diag;
    return report;
}

LocalLawReport locallaw_report(const Mat& a, Complex z) {
    if (z.imag() == 0.0) throw ParamError("locallaw_report: Im z must be nonzero");
    const int n = static_cast<int>(a.rows());
    const CMat r = resolvent(a, z);
    const Complex m0 = stieltjes_m0(z);

    LocalLawReport report;
    report.z = z;
    report.entrywise_off_max = 0.0;
    report.entrywise_diag_max = 0.0;
    for (int j = 0; j < n; ++j) {
        report.entrywise_diag_max = std::max(report.entrywise_diag_max, std::abs(r(j, j) - m0));
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            report.entrywise_off_max = std::max(report.entrywise_off_max, std::abs(r(j, k)));
        }
    }
    const CVec row_sums = r * CVec::Ones(n);
    report.rowsum_max = row_sums.cwiseAbs().maxCoeff();
    const Complex total = row_sums.sum();
    report.totalsum_err = std::abs(total - static_cast<double>(n) * m0) / static_cast<double>(n);
    return report;
}

double trace_m0_check(const Mat& a, Complex z) {
    if (z.imag() == 0.0) throw ParamError("trace_m0_check: Im z must be nonzero");
    const CMat r = resolvent(a, z);
    const Complex mean_diag = r.trace() / static_cast<double>(a.rows());
    return std::abs(mean_diag - stieltjes_m0(z));
}

}  // namespace specmatch

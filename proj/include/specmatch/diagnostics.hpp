#pragma once

#include "specmatch/spectral.hpp"
#include "specmatch/types.hpp"

namespace specmatch {

struct DominanceReport {
    double min_true;
    double max_off;   // -inf when n == 1 (no off-diagonal entries)
    double margin;    // min_true - max_off
    bool separated;   // margin > 0
    double pred_diag;
    double diag_mean;
    double diag_rel_err;
};

struct LocalLawReport {
    Complex z;
    double entrywise_off_max;   // max_{j != k} |R_jk|
    double entrywise_diag_max;  // max_j |R_jj - m0(z)|
    double rowsum_max;          // max_j |e_j' R 1|
    double totalsum_err;        // |1' R 1 - n m0(z)| / n
};

// Separation and diagonal-magnitude statistics of X against the truth.
// Unconstrained methods are compared to (1-sigma^2)/eta; constrained methods
// are reported on the n-scaled matrix against 4(1-sigma^2)/(pi eta).
DominanceReport dominance_report(const SimilarityMatrix& x, const Permutation& truth,
                                 double sigma, bool constrained);

// Observational resolvent statistics at one spectral point.
LocalLawReport locallaw_report(const Mat& a, Complex z);

// |n^{-1} tr R(z) - m0(z)|.
double trace_m0_check(const Mat& a, Complex z);

}  // namespace specmatch

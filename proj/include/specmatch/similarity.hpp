#pragma once

#include "specmatch/spectral.hpp"
#include "specmatch/types.hpp"

namespace specmatch {

struct ContourSpec {
    double re_max = 3.0;
    double im_half;  // default eta/2, set by make_default
    int points_per_side = 256;

    static ContourSpec make_default(double eta) {
        ContourSpec spec;
        spec.im_half = eta / 2.0;
        return spec;
    }
};

// X = sum_{i,j} eta / ((lambda_i - mu_j)^2 + eta^2) (v_i'1)(w_j'1) v_i w_j',
// evaluated as V K W'.
SimilarityMatrix grampa(const Mat& a, const Mat& b, double eta);
SimilarityMatrix grampa_from_eig(const EigenDecomp& ea, const EigenDecomp& eb, double eta);

// Row-sum-constrained variant: per-eigenvalue weights
// tau_i = sum_j (w_j'1)^2 / ((lambda_i - mu_j)^2 + eta^2) replace the Cauchy
// kernel scale; every row sum is 1.
SimilarityMatrix rowqp(const Mat& a, const Mat& b, double eta);
SimilarityMatrix rowqp_from_eig(const EigenDecomp& ea, const EigenDecomp& eb, double eta);

// Contour cross-checks: (1/2pi) Re of the counterclockwise rectangle integral
// of R_A(z) J R_B(z + i eta), composite midpoint rule per side. Requires
// spectral_norm(a) <= 2.5.
SimilarityMatrix grampa_contour(const Mat& a, const Mat& b, double eta, const ContourSpec& spec);

// Same contour with the scalar factor
// F(z) = 2i / (1'R_B(z+i eta)1 - 1'R_B(z-i eta)1).
SimilarityMatrix rowqp_contour(const Mat& a, const Mat& b, double eta, const ContourSpec& spec);

// Dense KKT oracles (n <= 64): vectorized normal equations for the two QPs.
SimilarityMatrix kkt_oracle_regqp(const Mat& a, const Mat& b, double eta);
SimilarityMatrix kkt_oracle_rowqp(const Mat& a, const Mat& b, double eta);

}  // namespace specmatch

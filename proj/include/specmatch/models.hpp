#pragma once

#include <cstdint>

#include "specmatch/types.hpp"

namespace specmatch {

enum class TruthMode { identity, random };

struct NoiseParams {
    double sigma_emp;
    double sigma_thm;
    double d;
};

// d = n p (1-p); sigma_emp = sqrt((1-s)/(1-p)); sigma_thm floors sigma_emp^2
// at (ln n)^7 / d. Metadata only, never gates algorithms.
NoiseParams noise_params(int n, double p, double s);

// (raw - p)/sqrt(n p (1-p)) off the diagonal, 0 on it.
Mat center_scale(const Mat& raw, double p);

// result[i][j] = m[perm(i)][perm(j)].
Mat permute_conjugate(const Mat& m, const Permutation& perm);

// Correlated Erdos-Renyi pair: A ~ Bern(p) iid above the diagonal, B'
// resampled edgewise (Bern(s) on edges of A, Bern(p(1-s)/(1-p)) off), then
// b = permute_conjugate(b', truth^{-1}) and both centered/rescaled. At s=1,
// a = permute_conjugate(b, truth) exactly.
CorrelatedPair gen_er_pair(int n, double p, double s, uint64_t seed, TruthMode truth_mode);

// Correlated Gaussian Wigner pair: a_ij ~ N(0,1/n) iid for i<=j,
// b' = (a + sigma z)/sqrt(1+sigma^2), b = permute_conjugate(b', truth^{-1}).
CorrelatedPair gen_gaussian_pair(int n, double sigma, uint64_t seed, TruthMode truth_mode);

}  // namespace specmatch

#pragma once

#include <complex>

#include "specmatch/types.hpp"

namespace specmatch {

// Dense symmetric eigendecomposition, ascending eigenvalues, deterministic
// eigenvector signs (largest-magnitude entry positive, ties to lowest index).
EigenDecomp eig_sym(const Mat& a);

// R_A(z) = (A - zI)^{-1}, symmetrized. Real z within 1e-14 of an eigenvalue
// raises SingularShift.
CMat resolvent(const Mat& a, Complex z);

// Stieltjes transform of the semicircle law: the root of m^2 + zm + 1 = 0
// with sqrt(z^2-4) ~ z at infinity, branch cut on [-2,2].
Complex stieltjes_m0(Complex z);

enum class BoundarySide { plus, minus };

// Continuous extension m0(x +- i0) for x in [-2,2]; unit modulus.
Complex m0_boundary(double x, BoundarySide side);

// rho(x) = sqrt(4-x^2)/(2*pi) on [-2,2], 0 outside.
double semicircle_density(double x);

double spectral_norm(const Mat& a);

}  // namespace specmatch

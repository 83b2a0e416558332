#include "specmatch/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>
#include <numbers>

namespace specmatch {

namespace {

void require_finite(const Mat& a, const char* who) {
    if (!a.allFinite()) throw InvalidMatrix(std::string(who) + ": non-finite entries");
}

}  // namespace

EigenDecomp eig_sym(const Mat& a) {
    require_symmetric_shape(a, "eig_sym");
    require_finite(a, "eig_sym");
    Eigen::SelfAdjointEigenSolver<Mat> solver(a);
    if (solver.info() != Eigen::Success) throw NumericalFailure("eig_sym: solver did not converge");
    EigenDecomp dec;
    dec.values = solver.eigenvalues();
    dec.vectors = solver.eigenvectors();
    const int n = static_cast<int>(a.rows());
    for (int k = 0; k < n; ++k) {
        int arg = 0;
        double best = std::abs(dec.vectors(0, k));
        for (int i = 1; i < n; ++i) {
            const double v = std::abs(dec.vectors(i, k));
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        if (dec.vectors(arg, k) < 0) dec.vectors.col(k) = -dec.vectors.col(k);
    }
    return dec;
}

CMat resolvent(const Mat& a, Complex z) {
    require_symmetric_shape(a, "resolvent");
    require_finite(a, "resolvent");
    const int n = static_cast<int>(a.rows());
    if (z.imag() == 0.0) {
        const EigenDecomp dec = eig_sym(a);
        for (int k = 0; k < n; ++k)
            if (std::abs(z.real() - dec.values(k)) <= 1e-14)
                throw SingularShift("resolvent: real shift coincides with an eigenvalue");
    }
    CMat shifted = a.cast<Complex>();
    shifted.diagonal().array() -= z;
    CMat r = shifted.partialPivLu().solve(CMat::Identity(n, n));
    r = ((r + r.transpose()) / 2.0).eval();
    if (!r.allFinite()) throw NumericalFailure("resolvent: non-finite result");
    return r;
}

Complex stieltjes_m0(Complex z) {
    if (z.imag() == 0.0 && std::abs(z.real()) <= 2.0)
        throw BranchCutViolation("stieltjes_m0: z on the branch cut [-2,2]");
    const Complex root = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
    return (-z + root) / 2.0;
}

Complex m0_boundary(double x, BoundarySide side) {
    if (std::abs(x) > 2.0) throw DomainError("m0_boundary: |x| > 2");
    const double im = std::sqrt(std::max(0.0, 4.0 - x * x)) / 2.0;
    return {-x / 2.0, side == BoundarySide::plus ? im : -im};
}

double semicircle_density(double x) {
    if (std::abs(x) >= 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double spectral_norm(const Mat& a) {
    const EigenDecomp dec = eig_sym(a);
    return dec.values.cwiseAbs().maxCoeff();
}

}  // namespace specmatch

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "specmatch/rng.hpp"
#include "specmatch/spectral.hpp"

using namespace specmatch;

namespace {

Mat random_sym(int n, uint64_t seed) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const auto [g, _] = rng::normal_pair(rng::entry_key(seed, 1, i, j),
                                                 rng::entry_key(seed, 2, i, j));
            m(i, j) = m(j, i) = g / std::sqrt(static_cast<double>(n));
        }
    return m;
}

double simpson(double a, double b, int panels, double (*f)(double)) {
    const double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int k = 1; k < panels; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("eig_sym on diagonal and 2x2 exchange matrices") {
    Mat d(2, 2);
    d << 1, 0, 0, 2;
    const EigenDecomp dec = eig_sym(d);
    CHECK(dec.values(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dec.values(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK((dec.vectors - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    Mat x(2, 2);
    x << 0, 1, 1, 0;
    const EigenDecomp ex = eig_sym(x);
    CHECK(ex.values(0) == doctest::Approx(-1.0));
    CHECK(ex.values(1) == doctest::Approx(1.0));
    const double r = 1.0 / std::sqrt(2.0);
    // sign convention: tied magnitudes resolve to the lowest index, positive
    CHECK(ex.vectors(0, 0) == doctest::Approx(r));
    CHECK(ex.vectors(1, 0) == doctest::Approx(-r));
    CHECK(ex.vectors(0, 1) == doctest::Approx(r));
    CHECK(ex.vectors(1, 1) == doctest::Approx(r));
}

TEST_CASE("eig_sym invariants on random input") {
    const Mat a = random_sym(5, 42);
    const EigenDecomp dec = eig_sym(a);
    CHECK((dec.vectors.transpose() * dec.vectors - Mat::Identity(5, 5))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
    for (int k = 0; k < 5; ++k) {
        const double resid =
            (a * dec.vectors.col(k) - dec.values(k) * dec.vectors.col(k)).norm();
        CHECK(resid < 1e-8 * std::max(1.0, std::abs(dec.values(k))));
    }
    Mat recon = Mat::Zero(5, 5);
    for (int k = 0; k < 5; ++k)
        recon += dec.values(k) * dec.vectors.col(k) * dec.vectors.col(k).transpose();
    CHECK((recon - a).cwiseAbs().maxCoeff() < 1e-8 * (1.0 + a.cwiseAbs().maxCoeff()));
    for (int k = 1; k < 5; ++k) CHECK(dec.values(k) >= dec.values(k - 1));
}

TEST_CASE("eig_sym spectrum is permutation invariant") {
    const Mat a = random_sym(6, 7);
    std::vector<int> perm = {3, 1, 4, 0, 5, 2};
    Mat p = Mat::Zero(6, 6);
    for (int i = 0; i < 6; ++i) p(i, perm[i]) = 1.0;
    const Mat conj = p.transpose() * a * p;
    const EigenDecomp da = eig_sym(a);
    const EigenDecomp dc = eig_sym(conj);
    CHECK((da.values - dc.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("eig_sym rejects bad input") {
    Mat bad(2, 2);
    bad << 1, std::numeric_limits<double>::quiet_NaN(), 1, 1;
    CHECK_THROWS_AS(eig_sym(bad), InvalidMatrix);
    CHECK_THROWS_AS(eig_sym(Mat::Zero(2, 3)), DimensionError);
}

TEST_CASE("resolvent closed forms") {
    Mat scalar(1, 1);
    scalar << 0;
    const CMat r = resolvent(scalar, Complex(0, 1));
    CHECK(std::abs(r(0, 0) - Complex(0, 1)) < 1e-15);

    Mat d(2, 2);
    d << 1, 0, 0, 2;
    const CMat rd = resolvent(d, Complex(0, 0));
    CHECK(std::abs(rd(0, 0) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(rd(1, 1) - Complex(0.5, 0)) < 1e-14);
}

TEST_CASE("resolvent identities") {
    const Mat a = random_sym(4, 11);
    const Complex z(1.0, 1.0);
    const CMat r = resolvent(a, z);
    CHECK(((a.cast<Complex>() - z * CMat::Identity(4, 4)) * r - CMat::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-9);
    CHECK((r - r.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    // Ward identity
    const CMat lhs = r * r.conjugate();
    const CMat rhs = r.imag().cast<Complex>() / z.imag();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
    // conjugate symmetry
    const CMat rc = resolvent(a, std::conj(z));
    CHECK((rc - r.conjugate()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("resolvent rejects eigenvalue shifts") {
    Mat d(2, 2);
    d << 1, 0, 0, 2;
    CHECK_THROWS_AS(resolvent(d, Complex(1.0, 0.0)), SingularShift);
    CHECK_NOTHROW(resolvent(d, Complex(1.5, 0.0)));
}

TEST_CASE("stieltjes transform closed forms") {
    const Complex mi = stieltjes_m0(Complex(0, 1));
    CHECK(std::abs(mi - Complex(0, (std::sqrt(5.0) - 1.0) / 2.0)) < 1e-14);

    const Complex m3 = stieltjes_m0(Complex(3, 0));
    CHECK(std::abs(m3 - Complex((-3.0 + std::sqrt(5.0)) / 2.0, 0)) < 1e-14);

    const Complex m10 = stieltjes_m0(Complex(10, 0));
    CHECK(std::abs(m10 * m10 + 10.0 * m10 + 1.0) < 1e-12);
    CHECK(std::abs(m10 + 0.1) < 0.02);

    CHECK_THROWS_AS(stieltjes_m0(Complex(1.5, 0)), BranchCutViolation);
}

TEST_CASE("stieltjes quadratic identity and half-plane mapping on a grid") {
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double re = -3.0 + 6.0 * i / 9.0;
            for (const double sign : {1.0, -1.0}) {
                const Complex z(re, sign * (0.05 + 0.95 * j / 9.0));
                const Complex m = stieltjes_m0(z);
                CHECK(std::abs(m * m + z * m + 1.0) < 1e-12);
                CHECK(m.imag() * z.imag() > 0.0);
            }
        }
}

TEST_CASE("m0 boundary values") {
    CHECK(std::abs(m0_boundary(0, BoundarySide::plus) - Complex(0, 1)) < 1e-14);
    CHECK(std::abs(m0_boundary(2, BoundarySide::plus) - Complex(-1, 0)) < 1e-14);
    CHECK(std::abs(m0_boundary(1, BoundarySide::plus) -
                   Complex(-0.5, std::sqrt(3.0) / 2.0)) < 1e-14);
    for (int i = 0; i < 50; ++i) {
        const double x = -2.0 + 4.0 * i / 49.0;
        const Complex mp = m0_boundary(x, BoundarySide::plus);
        CHECK(std::abs(std::abs(mp) - 1.0) < 1e-12);
        CHECK(std::abs(mp.imag() / std::numbers::pi - semicircle_density(x)) < 1e-12);
        CHECK(std::abs(m0_boundary(x, BoundarySide::minus) - std::conj(mp)) < 1e-12);
    }
    CHECK_THROWS_AS(m0_boundary(2.1, BoundarySide::plus), DomainError);
}

TEST_CASE("semicircle density") {
    CHECK(semicircle_density(0.0) == doctest::Approx(1.0 / std::numbers::pi));
    CHECK(semicircle_density(2.0) == 0.0);
    CHECK(semicircle_density(-2.0) == 0.0);
    CHECK(semicircle_density(3.0) == 0.0);
    // Composite Simpson converges slowly here because of the sqrt endpoints:
    // 1e4 panels lands near 4e-7, not the 1e-8 a smooth integrand would give.
    const double integral = simpson(-2.0, 2.0, 10000, semicircle_density);
    CHECK(std::abs(integral - 1.0) < 8e-7);
    const double finer = simpson(-2.0, 2.0, 40000, semicircle_density);
    CHECK(std::abs(finer - 1.0) < std::abs(integral - 1.0));
}

TEST_CASE("spectral norm") {
    Mat d(2, 2);
    d << 1, 0, 0, -3;
    CHECK(spectral_norm(d) == doctest::Approx(3.0));
    CHECK(spectral_norm(Mat::Zero(4, 4)) == 0.0);

    const Mat a = random_sym(6, 5);
    // independent power-method oracle on A^2
    Vec x = Vec::Ones(6).normalized();
    for (int it = 0; it < 500; ++it) x = (a * (a * x)).normalized();
    const double oracle = std::sqrt(x.dot(a * (a * x)));
    CHECK(spectral_norm(a) == doctest::Approx(oracle).epsilon(1e-6));
}

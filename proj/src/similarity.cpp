#include "specmatch/similarity.hpp"

#include <Eigen/LU>
#include <array>
#include <cmath>
#include <numbers>

namespace specmatch {

std::string to_string(Method m) {
    switch (m) {
        case Method::grampa: return "grampa";
        case Method::rowqp: return "rowqp";
        case Method::grampa_contour: return "grampa_contour";
        case Method::rowqp_contour: return "rowqp_contour";
        case Method::kkt_regqp: return "kkt_regqp";
        case Method::kkt_rowqp: return "kkt_rowqp";
    }
    return "unknown";
}

Method method_from_string(const std::string& s) {
    if (s == "grampa") return Method::grampa;
    if (s == "rowqp") return Method::rowqp;
    if (s == "grampa_contour") return Method::grampa_contour;
    if (s == "rowqp_contour") return Method::rowqp_contour;
    if (s == "kkt_regqp") return Method::kkt_regqp;
    if (s == "kkt_rowqp") return Method::kkt_rowqp;
    throw ParamError("unknown method: " + s);
}

std::string to_string(ModelKind m) {
    return m == ModelKind::erdos_renyi ? "erdos_renyi" : "gaussian";
}

namespace {

void check_sim_inputs(const Mat& a, const Mat& b, double eta, const char* who) {
    require_same_dim(a, b, who);
    if (eta <= 0.0) throw ParamError(std::string(who) + ": eta must be positive");
}

}  // namespace

SimilarityMatrix grampa_from_eig(const EigenDecomp& ea, const EigenDecomp& eb, double eta) {
    const int n = static_cast<int>(ea.values.size());
    const Vec d = ea.vectors.transpose() * Vec::Ones(n);
    const Vec e = eb.vectors.transpose() * Vec::Ones(n);
    Mat k(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double gap = ea.values(i) - eb.values(j);
            k(i, j) = eta / (gap * gap + eta * eta) * d(i) * e(j);
        }
    }
    SimilarityMatrix x;
    x.entries = ea.vectors * k * eb.vectors.transpose();
    x.method = Method::grampa;
    x.eta = eta;
    return x;
}

SimilarityMatrix grampa(const Mat& a, const Mat& b, double eta) {
    check_sim_inputs(a, b, eta, "grampa");
    return grampa_from_eig(eig_sym(a), eig_sym(b), eta);
}

SimilarityMatrix rowqp_from_eig(const EigenDecomp& ea, const EigenDecomp& eb, double eta) {
    const int n = static_cast<int>(ea.values.size());
    const Vec d = ea.vectors.transpose() * Vec::Ones(n);
    const Vec e = eb.vectors.transpose() * Vec::Ones(n);
    Mat k(n, n);
    for (int i = 0; i < n; ++i) {
        double tau = 0.0;
        for (int j = 0; j < n; ++j) {
            const double gap = ea.values(i) - eb.values(j);
            k(i, j) = 1.0 / (gap * gap + eta * eta);
            tau += e(j) * e(j) * k(i, j);
        }
        for (int j = 0; j < n; ++j) k(i, j) *= d(i) * e(j) / tau;
    }
    SimilarityMatrix x;
    x.entries = ea.vectors * k * eb.vectors.transpose();
    x.method = Method::rowqp;
    x.eta = eta;
    return x;
}

SimilarityMatrix rowqp(const Mat& a, const Mat& b, double eta) {
    check_sim_inputs(a, b, eta, "rowqp");
    return rowqp_from_eig(eig_sym(a), eig_sym(b), eta);
}

namespace {

struct ContourAccum {
    // Midpoint nodes along the counterclockwise rectangle with corners
    // (+-re_max, +-im_half); each node carries its complex step dz.
    std::vector<std::pair<Complex, Complex>> nodes;

    ContourAccum(const ContourSpec& spec) {
        const double r = spec.re_max;
        const double h = spec.im_half;
        const int m = spec.points_per_side;
        const std::array<std::pair<Complex, Complex>, 4> sides = {{
            {{-r, -h}, {r, -h}},
            {{r, -h}, {r, h}},
            {{r, h}, {-r, h}},
            {{-r, h}, {-r, -h}},
        }};
        for (const auto& [z0, z1] : sides) {
            const Complex step = (z1 - z0) / static_cast<double>(m);
            for (int k = 0; k < m; ++k)
                nodes.emplace_back(z0 + step * (static_cast<double>(k) + 0.5), step);
        }
    }
};

void check_contour_inputs(const Mat& a, const Mat& b, double eta, const ContourSpec& spec,
                          const char* who) {
    check_sim_inputs(a, b, eta, who);
    if (spec.points_per_side < 16)
        throw ParamError(std::string(who) + ": points_per_side must be >= 16");
    if (spectral_norm(a) > 2.5)
        throw NormBoundViolated(std::string(who) + ": spectral norm of a exceeds 2.5");
}

CVec shifted_solve(const Mat& m, Complex z, const CVec& rhs) {
    CMat shifted = m.cast<Complex>();
    shifted.diagonal().array() -= z;
    return shifted.partialPivLu().solve(rhs);
}

}  // namespace

SimilarityMatrix grampa_contour(const Mat& a, const Mat& b, double eta,
                                const ContourSpec& spec) {
    check_contour_inputs(a, b, eta, spec, "grampa_contour");
    const int n = static_cast<int>(a.rows());
    const CVec ones = CVec::Ones(n);
    const ContourAccum contour(spec);
    CMat accum = CMat::Zero(n, n);
    for (const auto& [z, dz] : contour.nodes) {
        const CVec u = shifted_solve(a, z, ones);
        const CVec v = shifted_solve(b, z + Complex(0.0, eta), ones);
        accum.noalias() += (u * v.transpose()) * dz;
    }
    SimilarityMatrix x;
    x.entries = accum.real() / (2.0 * std::numbers::pi);
    x.method = Method::grampa_contour;
    x.eta = eta;
    return x;
}

SimilarityMatrix rowqp_contour(const Mat& a, const Mat& b, double eta, const ContourSpec& spec) {
    check_contour_inputs(a, b, eta, spec, "rowqp_contour");
    const int n = static_cast<int>(a.rows());
    const CVec ones = CVec::Ones(n);
    const ContourAccum contour(spec);
    CMat accum = CMat::Zero(n, n);
    for (const auto& [z, dz] : contour.nodes) {
        const CVec u = shifted_solve(a, z, ones);
        const CVec v_up = shifted_solve(b, z + Complex(0.0, eta), ones);
        const CVec v_dn = shifted_solve(b, z - Complex(0.0, eta), ones);
        const Complex denom = ones.dot(v_up) - ones.dot(v_dn);
        if (std::abs(denom) < 1e-12)
            throw NumericalFailure("rowqp_contour: vanishing denominator in F(z)");
        const Complex f = Complex(0.0, 2.0) / denom;
        accum.noalias() += (u * v_up.transpose()) * (f * dz);
    }
    SimilarityMatrix x;
    x.entries = accum.real() / (2.0 * std::numbers::pi);
    x.method = Method::rowqp_contour;
    x.eta = eta;
    return x;
}

namespace {

// vec is column-major throughout; L = kron(I, A) - kron(B', I) realizes
// vec(AX - XB).
Mat vectorized_operator(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.rows());
    Mat l = Mat::Zero(n * n, n * n);
    for (int j = 0; j < n; ++j)
        l.block(j * n, j * n, n, n) = a;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            l.block(j * n, k * n, n, n).diagonal().array() -= b(k, j);
    return l;
}

void check_oracle_inputs(const Mat& a, const Mat& b, double eta, const char* who) {
    check_sim_inputs(a, b, eta, who);
    if (a.rows() > 64) throw SizeError(std::string(who) + ": n > 64");
}

}  // namespace

SimilarityMatrix kkt_oracle_regqp(const Mat& a, const Mat& b, double eta) {
    check_oracle_inputs(a, b, eta, "kkt_oracle_regqp");
    const int n = static_cast<int>(a.rows());
    const Mat l = vectorized_operator(a, b);
    Mat normal = l.transpose() * l;
    normal.diagonal().array() += eta * eta;
    const Vec y = normal.partialPivLu().solve(Vec::Ones(n * n));
    const double total = y.sum();
    if (std::abs(total) < 1e-300) throw NumericalFailure("kkt_oracle_regqp: degenerate scale");
    SimilarityMatrix x;
    x.entries = Eigen::Map<const Mat>(y.data(), n, n) * (static_cast<double>(n) / total);
    x.method = Method::kkt_regqp;
    x.eta = eta;
    return x;
}

SimilarityMatrix kkt_oracle_rowqp(const Mat& a, const Mat& b, double eta) {
    check_oracle_inputs(a, b, eta, "kkt_oracle_rowqp");
    const int n = static_cast<int>(a.rows());
    const int nn = n * n;
    const Mat l = vectorized_operator(a, b);
    Mat kkt = Mat::Zero(nn + n, nn + n);
    kkt.topLeftCorner(nn, nn) = 2.0 * (l.transpose() * l);
    kkt.topLeftCorner(nn, nn).diagonal().array() += 2.0 * eta * eta;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            kkt(nn + i, i + j * n) = 1.0;
            kkt(i + j * n, nn + i) = 1.0;
        }
    Vec rhs = Vec::Zero(nn + n);
    rhs.tail(n).setOnes();
    const Vec sol = kkt.partialPivLu().solve(rhs);
    SimilarityMatrix x;
    x.entries = Eigen::Map<const Mat>(sol.data(), n, n);
    x.method = Method::kkt_rowqp;
    x.eta = eta;
    return x;
}

}  // namespace specmatch

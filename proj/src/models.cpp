#include "specmatch/models.hpp"

#include <cmath>

#include "specmatch/rng.hpp"

namespace specmatch {

namespace {

constexpr uint64_t kTagEdgesA = 0x61;
constexpr uint64_t kTagEdgesB = 0x62;
constexpr uint64_t kTagNoiseZ = 0x7a;
constexpr uint64_t kTagTruth = 0x70;

Permutation make_truth(int n, uint64_t seed, TruthMode mode) {
    if (mode == TruthMode::identity) return Permutation::identity(n);
    rng::SplitMix64 stream(rng::entry_key(seed, kTagTruth, 0, 0));
    Permutation truth;
    truth.targets = rng::fisher_yates(n, stream);
    return truth;
}

}  // namespace

NoiseParams noise_params(int n, double p, double s) {
    if (p <= 0.0 || p >= 1.0) throw ModelParamError("noise_params: p must be in (0,1)");
    if (s < 0.0 || s > 1.0) throw ModelParamError("noise_params: s must be in [0,1]");
    NoiseParams out;
    out.d = n * p * (1.0 - p);
    out.sigma_emp = std::sqrt((1.0 - s) / (1.0 - p));
    const double log7 = std::pow(std::log(static_cast<double>(n)), 7.0);
    out.sigma_thm = std::sqrt(std::max(out.sigma_emp * out.sigma_emp, log7 / out.d));
    return out;
}

Mat center_scale(const Mat& raw, double p) {
    if (p <= 0.0 || p >= 1.0) throw ModelParamError("center_scale: p must be in (0,1)");
    require_symmetric_shape(raw, "center_scale");
    const int n = static_cast<int>(raw.rows());
    const double scale = std::sqrt(n * p * (1.0 - p));
    Mat out = (raw.array() - p) / scale;
    out.diagonal().setZero();
    return out;
}

Mat permute_conjugate(const Mat& m, const Permutation& perm) {
    require_symmetric_shape(m, "permute_conjugate");
    const int n = static_cast<int>(m.rows());
    if (perm.size() != n) throw DimensionError("permute_conjugate: permutation size mismatch");
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m(perm(i), perm(j));
    return out;
}

CorrelatedPair gen_er_pair(int n, double p, double s, uint64_t seed, TruthMode truth_mode) {
    if (n < 2) throw ModelParamError("gen_er_pair: n must be >= 2");
    if (p <= 0.0 || p >= 1.0) throw ModelParamError("gen_er_pair: p must be in (0,1)");
    if (s <= 0.0 || s > 1.0) throw ModelParamError("gen_er_pair: s must be in (0,1]");
    const double p_off = p * (1.0 - s) / (1.0 - p);
    if (p_off < 0.0 || p_off > 1.0)
        throw ModelParamError("gen_er_pair: p(1-s)/(1-p) outside [0,1]");

    Mat raw_a = Mat::Zero(n, n);
    Mat raw_b = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool edge_a =
                rng::uniform01(rng::entry_key(seed, kTagEdgesA, i, j)) <= p;
            const double keep = edge_a ? s : p_off;
            const bool edge_b =
                rng::uniform01(rng::entry_key(seed, kTagEdgesB, i, j)) <= keep;
            raw_a(i, j) = raw_a(j, i) = edge_a ? 1.0 : 0.0;
            raw_b(i, j) = raw_b(j, i) = edge_b ? 1.0 : 0.0;
        }
    }

    CorrelatedPair pair;
    pair.truth = make_truth(n, seed, truth_mode);
    pair.a = center_scale(raw_a, p);
    pair.b = permute_conjugate(center_scale(raw_b, p), pair.truth.inverse());
    pair.model = ModelKind::erdos_renyi;
    pair.n = n;
    pair.p = p;
    pair.s = s;
    const NoiseParams np = noise_params(n, p, s);
    pair.sigma_emp = np.sigma_emp;
    pair.sigma_thm = np.sigma_thm;
    pair.d = np.d;
    pair.seed = seed;
    return pair;
}

CorrelatedPair gen_gaussian_pair(int n, double sigma, uint64_t seed, TruthMode truth_mode) {
    if (n < 2) throw ModelParamError("gen_gaussian_pair: n must be >= 2");
    if (sigma < 0.0 || sigma > 1.0)
        throw ModelParamError("gen_gaussian_pair: sigma must be in [0,1]");

    const double root_n = std::sqrt(static_cast<double>(n));
    const double denom = std::sqrt(1.0 + sigma * sigma);
    Mat a(n, n);
    Mat b_raw(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const auto [ga, gz] = rng::normal_pair(rng::entry_key(seed, kTagEdgesA, i, j),
                                                   rng::entry_key(seed, kTagNoiseZ, i, j));
            const double aij = ga / root_n;
            const double bij = (aij + sigma * gz / root_n) / denom;
            a(i, j) = a(j, i) = aij;
            b_raw(i, j) = b_raw(j, i) = bij;
        }
    }

    CorrelatedPair pair;
    pair.truth = make_truth(n, seed, truth_mode);
    pair.a = a;
    pair.b = permute_conjugate(b_raw, pair.truth.inverse());
    pair.model = ModelKind::gaussian;
    pair.n = n;
    pair.sigma_emp = sigma;
    pair.sigma_thm = sigma;
    pair.d = static_cast<double>(n);
    pair.seed = seed;
    return pair;
}

}  // namespace specmatch

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specmatch/errors.hpp"

namespace specmatch {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// targets[i] = pi(i), zero-based bijection on {0..n-1}.
struct Permutation {
    std::vector<int> targets;

    int size() const { return static_cast<int>(targets.size()); }
    int operator()(int i) const { return targets[i]; }

    static Permutation identity(int n) {
        Permutation p;
        p.targets.resize(n);
        for (int i = 0; i < n; ++i) p.targets[i] = i;
        return p;
    }

    Permutation inverse() const {
        Permutation inv;
        inv.targets.resize(targets.size());
        for (int i = 0; i < size(); ++i) inv.targets[targets[i]] = i;
        return inv;
    }

    bool is_valid() const {
        const int n = size();
        std::vector<char> seen(n, 0);
        for (int t : targets) {
            if (t < 0 || t >= n || seen[t]) return false;
            seen[t] = 1;
        }
        return true;
    }

    bool operator==(const Permutation& other) const { return targets == other.targets; }
};

// Eigenvalues ascending; column k of vectors is the unit eigenvector for
// eigenvalue k, sign fixed so the largest-magnitude entry is positive.
struct EigenDecomp {
    Vec values;
    Mat vectors;
};

enum class Method { grampa, rowqp, grampa_contour, rowqp_contour, kkt_regqp, kkt_rowqp };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct SimilarityMatrix {
    Mat entries;
    Method method;
    double eta;

    int n() const { return static_cast<int>(entries.rows()); }
};

enum class ModelKind { erdos_renyi, gaussian };

std::string to_string(ModelKind m);

struct CorrelatedPair {
    Mat a;
    Mat b;
    Permutation truth;
    ModelKind model;
    int n;
    std::optional<double> p;
    std::optional<double> s;
    double sigma_emp;
    double sigma_thm;
    double d;
    uint64_t seed;
};

// map[i] = matched target of row i, or -1 if unassigned.
struct Matching {
    std::vector<int> map;
    bool bijective;

    int size() const { return static_cast<int>(map.size()); }
};

inline void require_symmetric_shape(const Mat& a, const char* who) {
    if (a.rows() != a.cols()) throw DimensionError(std::string(who) + ": matrix is not square");
    if (a.rows() < 1) throw DimensionError(std::string(who) + ": empty matrix");
}

inline void require_same_dim(const Mat& a, const Mat& b, const char* who) {
    require_symmetric_shape(a, who);
    require_symmetric_shape(b, who);
    if (a.rows() != b.rows())
        throw DimensionError(std::string(who) + ": dimension mismatch " +
                             std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
}

}  // namespace specmatch

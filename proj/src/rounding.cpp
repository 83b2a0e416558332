#include "specmatch/rounding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace specmatch {

namespace {

void check_finite(const SimilarityMatrix& x, const char* who) {
    if (x.entries.rows() != x.entries.cols() || x.entries.rows() < 1)
        throw DimensionError(std::string(who) + ": matrix is not square");
    if (!x.entries.allFinite()) throw InvalidMatrix(std::string(who) + ": non-finite entries");
}

// Standard potentials formulation over the negated matrix (1-based arrays,
// column 0 is the virtual source).
std::vector<int> hungarian_max(const Mat& score) {
    const int n = static_cast<int>(score.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = -score(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> map(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) map[p[j] - 1] = j - 1;
    return map;
}

}  // namespace

Matching lap_round(const SimilarityMatrix& x) {
    check_finite(x, "lap_round");
    Matching m;
    m.map = hungarian_max(x.entries);
    m.bijective = true;
    return m;
}

Matching greedy_round(const SimilarityMatrix& x) {
    check_finite(x, "greedy_round");
    const int n = x.n();
    struct Entry {
        double value;
        int row;
        int col;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries.push_back({x.entries(i, j), i, j});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    });
    Matching m;
    m.map.assign(n, -1);
    m.bijective = true;
    std::vector<char> col_used(n, 0);
    int assigned = 0;
    for (const Entry& e : entries) {
        if (assigned == n) break;
        if (m.map[e.row] != -1 || col_used[e.col]) continue;
        m.map[e.row] = e.col;
        col_used[e.col] = 1;
        ++assigned;
    }
    return m;
}

Matching argmax_round(const SimilarityMatrix& x) {
    check_finite(x, "argmax_round");
    const int n = x.n();
    Matching m;
    m.map.resize(n);
    std::vector<char> hit(n, 0);
    m.bijective = true;
    for (int i = 0; i < n; ++i) {
        int arg = 0;
        for (int j = 1; j < n; ++j)
            if (x.entries(i, j) > x.entries(i, arg)) arg = j;
        m.map[i] = arg;
        if (hit[arg]) m.bijective = false;
        hit[arg] = 1;
    }
    return m;
}

Matching brute_force_round(const SimilarityMatrix& x) {
    check_finite(x, "brute_force_round");
    const int n = x.n();
    if (n > 8) throw SizeError("brute_force_round: n > 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    double best_value = -std::numeric_limits<double>::infinity();
    do {
        double value = 0.0;
        for (int i = 0; i < n; ++i) value += x.entries(i, perm[i]);
        if (value > best_value) {
            best_value = value;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Matching m;
    m.map = best;
    m.bijective = true;
    return m;
}

double objective_value(const SimilarityMatrix& x, const Matching& m) {
    if (m.size() != x.n()) throw DimensionError("objective_value: size mismatch");
    double value = 0.0;
    for (int i = 0; i < x.n(); ++i)
        if (m.map[i] >= 0) value += x.entries(i, m.map[i]);
    return value;
}

double overlap(const Matching& candidate, const Permutation& truth) {
    if (candidate.size() != truth.size()) throw DimensionError("overlap: size mismatch");
    const int n = truth.size();
    int hits = 0;
    for (int i = 0; i < n; ++i)
        if (candidate.map[i] == truth(i)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace specmatch

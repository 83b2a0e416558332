#pragma once

#include "specmatch/types.hpp"

namespace specmatch {

// Hungarian O(n^3) maximization of sum_i X[i][map[i]]; always bijective.
Matching lap_round(const SimilarityMatrix& x);

// Globally largest remaining entry first; ties by (lower row, lower col).
Matching greedy_round(const SimilarityMatrix& x);

// Row argmax, ties to lowest column; bijective flag may be false.
Matching argmax_round(const SimilarityMatrix& x);

// Exhaustive search, n <= 8; lexicographically smallest optimal permutation.
Matching brute_force_round(const SimilarityMatrix& x);

// Shared objective so optimality comparisons are exact.
double objective_value(const SimilarityMatrix& x, const Matching& m);

// Fraction of rows with map[i] == truth[i]; unassigned rows count as wrong.
double overlap(const Matching& candidate, const Permutation& truth);

}  // namespace specmatch

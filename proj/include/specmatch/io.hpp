#pragma once

#include <iosfwd>
#include <string>

#include "specmatch/types.hpp"

namespace specmatch {

// Plain-text dump: first line "n", then n lines of n space-separated entries
// at 17 significant digits (round-trips doubles exactly).
void write_matrix(std::ostream& out, const Mat& m);
void write_matrix_file(const std::string& path, const Mat& m);
Mat read_matrix(std::istream& in, const std::string& what);
Mat read_matrix_file(const std::string& path);

// One zero-based integer per line.
void write_permutation_file(const std::string& path, const Permutation& p);
Permutation read_permutation_file(const std::string& path);

std::string format_real(double v);

}  // namespace specmatch

#include "specmatch/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace specmatch {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(std::ostream& out, const Mat& m) {
    const int n = static_cast<int>(m.rows());
    out << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << format_real(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const Mat& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_matrix(out, m);
    if (!out) throw IoError("write failed: " + path);
}

Mat read_matrix(std::istream& in, const std::string& what) {
    int n = 0;
    if (!(in >> n) || n < 1) throw IoError("bad matrix header in " + what);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> m(i, j))) throw IoError("truncated matrix in " + what);
    return m;
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    return read_matrix(in, path);
}

void write_permutation_file(const std::string& path, const Permutation& p) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    for (int t : p.targets) out << t << '\n';
    if (!out) throw IoError("write failed: " + path);
}

Permutation read_permutation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    Permutation p;
    int value = 0;
    while (in >> value) p.targets.push_back(value);
    if (p.targets.empty() || !p.is_valid())
        throw IoError("not a valid permutation: " + path);
    return p;
}

}  // namespace specmatch

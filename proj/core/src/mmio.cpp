#include "gabp/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gabp::io {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

bool parse_double(const std::string& token, double& out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end != begin && *end == '\0';
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(path, 0, "cannot open file");
    return f;
}

}  // namespace

SymmetricSparseMatrix read_matrix_market(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(name, 1, "empty file");
    ++lineno;
    strip_cr(line);
    {
        std::istringstream hs(line);
        std::string banner, object, format, field, symmetry;
        hs >> banner >> object >> format >> field >> symmetry;
        if (lower(banner) != "%%matrixmarket")
            throw ParseError(name, lineno, "missing %%MatrixMarket banner");
        if (lower(object) != "matrix" || lower(format) != "coordinate")
            throw ParseError(name, lineno, "expected 'matrix coordinate' header");
        const std::string f = lower(field);
        if (f != "real" && f != "integer")
            throw ParseError(name, lineno, "unsupported field '" + field + "' (need real or integer)");
        if (lower(symmetry) != "symmetric")
            throw ParseError(name, lineno,
                             "unsupported symmetry '" + symmetry + "' (only symmetric matrices)");
    }

    long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (blank(line) || line[0] == '%') continue;
        std::istringstream ss(line);
        if (!(ss >> rows >> cols >> nnz)) throw ParseError(name, lineno, "malformed size line");
        break;
    }
    if (rows < 0) throw ParseError(name, lineno, "missing size line");
    if (rows != cols) throw ParseError(name, lineno, "matrix is not square");
    if (rows < 1) throw ParseError(name, lineno, "dimension must be >= 1");

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(std::max(0L, nnz)));
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (blank(line) || line[0] == '%') continue;
        std::istringstream ss(line);
        long i = 0, j = 0;
        std::string vtok;
        double v = 0.0;
        if (!(ss >> i >> j >> vtok) || !parse_double(vtok, v))
            throw ParseError(name, lineno, "malformed entry line");
        if (i < 1 || i > rows || j < 1 || j > rows)
            throw ParseError(name, lineno, "entry index out of range");
        triplets.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), v});
        ++seen;
    }
    if (nnz >= 0 && seen != nnz)
        throw ParseError(name, lineno,
                         "entry count mismatch: header says " + std::to_string(nnz) + ", found " +
                             std::to_string(seen));
    return SymmetricSparseMatrix::from_triplets(static_cast<int>(rows), triplets);
}

SymmetricSparseMatrix read_matrix_market(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    return read_matrix_market(f, path);
}

void write_matrix_market(const SymmetricSparseMatrix& A, std::ostream& out) {
    std::size_t nnz = 0;
    A.for_each_upper([&](int, int, double) { ++nnz; });
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << A.dim() << ' ' << A.dim() << ' ' << nnz << '\n';
    out << std::setprecision(17);
    // lower triangle: row >= col
    A.for_each_upper([&](int i, int j, double v) { out << j + 1 << ' ' << i + 1 << ' ' << v << '\n'; });
}

void write_matrix_market(const SymmetricSparseMatrix& A, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError(path, 0, "cannot open file for writing");
    write_matrix_market(A, f);
}

Vector read_vector(std::istream& in, const std::string& name) {
    Vector v;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (blank(line) || line[0] == '#' || line[0] == '%') continue;
        std::string token = line;
        // single-column CSV: tolerate one trailing comma
        if (!token.empty() && token.back() == ',') token.pop_back();
        // trim
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        token = (b == std::string::npos) ? std::string() : token.substr(b, e - b + 1);
        double x = 0.0;
        if (!parse_double(token, x)) {
            if (first_content) {  // CSV header
                first_content = false;
                continue;
            }
            throw ParseError(name, lineno, "not a number: '" + token + "'");
        }
        first_content = false;
        v.push_back(x);
    }
    if (v.empty()) throw ParseError(name, lineno, "no values found");
    return v;
}

Vector read_vector(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    return read_vector(f, path);
}

void write_vector(const Vector& v, std::ostream& out) {
    out << std::setprecision(17);
    for (double x : v) out << x << '\n';
}

void write_vector(const Vector& v, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError(path, 0, "cannot open file for writing");
    write_vector(v, f);
}

}  // namespace gabp::io

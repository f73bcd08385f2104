#include "gabp/sparse_matrix.hpp"

#include <algorithm>
#include <map>

namespace gabp {

SymmetricSparseMatrix SymmetricSparseMatrix::from_triplets(int n,
                                                           const std::vector<Triplet>& entries) {
    if (n < 1) throw InvalidArgumentError("matrix dimension must be >= 1");

    // Accumulate by unordered pair; duplicates must agree exactly.
    std::map<std::pair<int, int>, double> values;
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= n) throw IndexOutOfRangeError(t.row, n);
        if (t.col < 0 || t.col >= n) throw IndexOutOfRangeError(t.col, n);
        const auto key = std::minmax(t.row, t.col);
        auto [it, inserted] = values.emplace(key, t.value);
        if (!inserted && it->second != t.value) throw AsymmetricInputError(t.row, t.col);
    }

    SymmetricSparseMatrix m;
    m.n_ = n;
    m.diag_.assign(static_cast<std::size_t>(n), 0.0);
    m.rows_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [key, v] : values) {
        const auto [i, j] = key;
        if (i == j) {
            m.diag_[static_cast<std::size_t>(i)] = v;
        } else if (v != 0.0) {
            m.rows_[static_cast<std::size_t>(i)].emplace_back(j, v);
            m.rows_[static_cast<std::size_t>(j)].emplace_back(i, v);
        }
    }
    for (int i = 0; i < n; ++i)
        if (m.diag_[static_cast<std::size_t>(i)] == 0.0) throw MissingDiagonalError(i);
    for (auto& row : m.rows_) std::sort(row.begin(), row.end());
    return m;
}

double SymmetricSparseMatrix::coeff(int i, int j) const {
    if (i < 0 || i >= n_) throw IndexOutOfRangeError(i, n_);
    if (j < 0 || j >= n_) throw IndexOutOfRangeError(j, n_);
    if (i == j) return diag_[static_cast<std::size_t>(i)];
    const auto& row = rows_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const std::pair<int, double>& e, int col) { return e.first < col; });
    return (it != row.end() && it->first == j) ? it->second : 0.0;
}

std::size_t SymmetricSparseMatrix::off_diagonal_count() const {
    std::size_t c = 0;
    for (const auto& row : rows_) c += row.size();
    return c;
}

Vector multiply(const SymmetricSparseMatrix& A, const Vector& x) {
    if (static_cast<int>(x.size()) != A.dim())
        throw DimensionMismatchError("multiply: vector length does not match matrix dimension");
    const int n = A.dim();
    Vector y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = A.diagonal(i) * x[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : A.off_diagonal_row(i)) s += v * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

double residual_inf_norm(const SymmetricSparseMatrix& A, const Vector& x, const Vector& b) {
    const Vector ax = multiply(A, x);
    return max_abs_diff(ax, b);
}

}  // namespace gabp

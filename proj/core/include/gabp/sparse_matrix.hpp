#pragma once

#include <utility>
#include <vector>

#include "gabp/errors.hpp"
#include "gabp/types.hpp"

namespace gabp {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Symmetric sparse matrix stored as per-node adjacency lists, the natural
/// layout for edge-centric message passing. Every diagonal entry must be
/// present and nonzero. Off-diagonal entries with value exactly zero are
/// dropped: an entry is an edge iff its stored value != 0.
class SymmetricSparseMatrix {
public:
    /// Builds from (i, j, value) triplets. Either triangle (or both) may be
    /// supplied; duplicates must agree exactly or AsymmetricInputError is
    /// thrown. MissingDiagonalError if some A_ii is absent or zero.
    static SymmetricSparseMatrix from_triplets(int n, const std::vector<Triplet>& entries);

    int dim() const { return n_; }

    double diagonal(int i) const { return diag_[static_cast<std::size_t>(i)]; }

    /// A_ij, 0.0 if the entry is not stored. Symmetric by construction.
    double coeff(int i, int j) const;

    /// Off-diagonal entries of row i as (column, value), sorted by column.
    const std::vector<std::pair<int, double>>& off_diagonal_row(int i) const {
        return rows_[static_cast<std::size_t>(i)];
    }

    /// Number of stored off-diagonal entries counting both (i,j) and (j,i).
    std::size_t off_diagonal_count() const;

    /// Visits the upper triangle including the diagonal: f(i, j, value) with j >= i.
    template <class F>
    void for_each_upper(F&& f) const {
        for (int i = 0; i < n_; ++i) {
            f(i, i, diag_[static_cast<std::size_t>(i)]);
            for (const auto& [j, v] : rows_[static_cast<std::size_t>(i)])
                if (j > i) f(i, j, v);
        }
    }

private:
    int n_ = 0;
    std::vector<double> diag_;
    std::vector<std::vector<std::pair<int, double>>> rows_;
};

Vector multiply(const SymmetricSparseMatrix& A, const Vector& x);

/// ||A x - b||_inf
double residual_inf_norm(const SymmetricSparseMatrix& A, const Vector& x, const Vector& b);

}  // namespace gabp

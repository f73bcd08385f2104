#pragma once

#include <iosfwd>
#include <string>

#include "gabp/sparse_matrix.hpp"
#include "gabp/types.hpp"

namespace gabp::io {

/// Reads Matrix Market coordinate format; the symmetry qualifier must be
/// "symmetric" and the field "real" or "integer". Entries may be given in
/// either triangle; conflicting duplicates raise AsymmetricInputError.
SymmetricSparseMatrix read_matrix_market(std::istream& in, const std::string& name = "<stream>");
SymmetricSparseMatrix read_matrix_market(const std::string& path);

/// Writes coordinate real symmetric, lower triangle, 17 significant digits.
void write_matrix_market(const SymmetricSparseMatrix& A, std::ostream& out);
void write_matrix_market(const SymmetricSparseMatrix& A, const std::string& path);

/// Reads a dense vector: one real per line, or a single-column CSV.
/// Blank lines and comment lines (# or %) are skipped; one non-numeric
/// header line is tolerated at the top.
Vector read_vector(std::istream& in, const std::string& name = "<stream>");
Vector read_vector(const std::string& path);

void write_vector(const Vector& v, std::ostream& out);
void write_vector(const Vector& v, const std::string& path);

}  // namespace gabp::io

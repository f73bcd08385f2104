#pragma once

#include "gabp/graph.hpp"
#include "gabp/sparse_matrix.hpp"

namespace gabp {

struct SpectralRadiusEstimate {
    double value = 0.0;   // estimate of rho(|I - A|), >= 0
    int iterations = 0;   // power iterations used
    bool converged = true;
};

/// |A_ii| > sum_{j != i} |A_ij| for every row.
bool is_strictly_diagonally_dominant(const SymmetricSparseMatrix& A);

/// Estimates rho(|I_n - A|), entrywise absolute value, by power iteration.
/// |I - A| is nonnegative, so its dominant eigenvalue is real and equals the
/// spectral radius. Iterates on |I - A| + c I (c = max row sum) to avoid
/// stagnation on bipartite structures; the reported value subtracts c back
/// out. Deterministic all-ones start. Convergence: successive Rayleigh
/// estimates within tol. On max_iters the last estimate is reported with
/// converged = false.
SpectralRadiusEstimate spectral_radius_abs_shift(const SymmetricSparseMatrix& A,
                                                 int max_iters = 10000, double tol = 1e-9);

struct DiagnosticsReport {
    bool strictly_diagonally_dominant = false;
    double spectral_radius_estimate = 0.0;
    bool spectral_radius_converged = true;
    int power_iterations_used = 0;
    bool is_tree = false;

    /// Either sufficient condition for guaranteed convergence of the solver.
    bool convergence_guaranteed() const {
        return strictly_diagonally_dominant ||
               (spectral_radius_converged && spectral_radius_estimate < 1.0);
    }
};

DiagnosticsReport diagnose(const SymmetricSparseMatrix& A, int max_iters = 10000,
                           double tol = 1e-9);

}  // namespace gabp

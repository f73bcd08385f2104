#include "gabp/diagnostics.hpp"

#include <cmath>

namespace gabp {

bool is_strictly_diagonally_dominant(const SymmetricSparseMatrix& A) {
    for (int i = 0; i < A.dim(); ++i) {
        double off = 0.0;
        for (const auto& [j, v] : A.off_diagonal_row(i)) {
            (void)j;
            off += std::abs(v);
        }
        if (std::abs(A.diagonal(i)) <= off) return false;
    }
    return true;
}

SpectralRadiusEstimate spectral_radius_abs_shift(const SymmetricSparseMatrix& A, int max_iters,
                                                 double tol) {
    const int n = A.dim();

    // y = |I - A| x, entrywise absolute values
    auto apply_abs_shift = [&](const Vector& x, Vector& y) {
        for (int i = 0; i < n; ++i) {
            double s = std::abs(1.0 - A.diagonal(i)) * x[static_cast<std::size_t>(i)];
            for (const auto& [j, v] : A.off_diagonal_row(i))
                s += std::abs(v) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
    };

    double shift = 0.0;  // max row sum of |I - A|, an upper bound on rho
    for (int i = 0; i < n; ++i) {
        double row = std::abs(1.0 - A.diagonal(i));
        for (const auto& [j, v] : A.off_diagonal_row(i)) {
            (void)j;
            row += std::abs(v);
        }
        shift = std::max(shift, row);
    }
    if (shift == 0.0) return {0.0, 0, true};  // |I - A| is the zero matrix

    Vector v(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    Vector w(static_cast<std::size_t>(n));
    double last = 0.0;
    bool have_last = false;
    SpectralRadiusEstimate est;
    for (int t = 1; t <= max_iters; ++t) {
        apply_abs_shift(v, w);
        double rayleigh = 0.0;
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            w[static_cast<std::size_t>(i)] += shift * v[static_cast<std::size_t>(i)];
            rayleigh += v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
            norm2 += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
        }
        est.iterations = t;
        est.value = std::max(0.0, rayleigh - shift);
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) {
            est.value = 0.0;
            return est;
        }
        for (double& x : w) x /= norm;
        v.swap(w);
        if (have_last && std::abs(rayleigh - last) <= tol) return est;
        last = rayleigh;
        have_last = true;
    }
    est.converged = false;
    return est;
}

DiagnosticsReport diagnose(const SymmetricSparseMatrix& A, int max_iters, double tol) {
    DiagnosticsReport r;
    r.strictly_diagonally_dominant = is_strictly_diagonally_dominant(A);
    const SpectralRadiusEstimate s = spectral_radius_abs_shift(A, max_iters, tol);
    r.spectral_radius_estimate = s.value;
    r.spectral_radius_converged = s.converged;
    r.power_iterations_used = s.iterations;
    r.is_tree = is_tree(build_graph(A));
    return r;
}

}  // namespace gabp

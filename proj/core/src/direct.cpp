#include "gabp/direct.hpp"

#include <cmath>
#include <numeric>

namespace gabp {

namespace {

constexpr double kPivotTol = 1e-12;

struct LuFactors {
    int n;
    std::vector<double> lu;   // row-major, L below unit diagonal, U on/above
    std::vector<int> perm;    // row permutation
};

LuFactors factorize(const SymmetricSparseMatrix& A) {
    const int n = A.dim();
    LuFactors f;
    f.n = n;
    f.lu.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    f.perm.resize(static_cast<std::size_t>(n));
    std::iota(f.perm.begin(), f.perm.end(), 0);

    auto at = [&](int r, int c) -> double& {
        return f.lu[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(c)];
    };
    for (int i = 0; i < n; ++i) {
        at(i, i) = A.diagonal(i);
        for (const auto& [j, v] : A.off_diagonal_row(i)) at(i, j) = v;
    }

    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double pivot_mag = std::abs(at(k, k));
        for (int r = k + 1; r < n; ++r) {
            const double m = std::abs(at(r, k));
            if (m > pivot_mag) {
                pivot_mag = m;
                pivot_row = r;
            }
        }
        if (pivot_mag < kPivotTol)
            throw SingularMatrixError("pivot magnitude " + std::to_string(pivot_mag) +
                                      " below tolerance at column " + std::to_string(k));
        if (pivot_row != k) {
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot_row, c));
            std::swap(f.perm[static_cast<std::size_t>(k)],
                      f.perm[static_cast<std::size_t>(pivot_row)]);
        }
        const double pivot = at(k, k);
        for (int r = k + 1; r < n; ++r) {
            const double l = at(r, k) / pivot;
            at(r, k) = l;
            if (l == 0.0) continue;
            for (int c = k + 1; c < n; ++c) at(r, c) -= l * at(k, c);
        }
    }
    return f;
}

Vector lu_solve(const LuFactors& f, const Vector& rhs) {
    const int n = f.n;
    auto at = [&](int r, int c) {
        return f.lu[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(c)];
    };
    Vector y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = rhs[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
        for (int j = 0; j < i; ++j) s -= at(i, j) * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    Vector x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        double s = y[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= at(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s / at(i, i);
    }
    return x;
}

}  // namespace

Vector direct_solve(const SymmetricSparseMatrix& A, const Vector& b) {
    if (static_cast<int>(b.size()) != A.dim())
        throw DimensionMismatchError("direct_solve: rhs length does not match matrix dimension");
    const LuFactors f = factorize(A);
    Vector x = lu_solve(f, b);

    // One refinement step; the residual uses the exact sparse A.
    const Vector ax = multiply(A, x);
    Vector r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - ax[i];
    const Vector dx = lu_solve(f, r);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
    return x;
}

double quadratic_form(const SymmetricSparseMatrix& A, const Vector& b, const Vector& x) {
    if (static_cast<int>(b.size()) != A.dim() || x.size() != b.size())
        throw DimensionMismatchError("quadratic_form: dimensions do not agree");
    const Vector ax = multiply(A, x);
    double xax = 0.0;
    double bx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xax += x[i] * ax[i];
        bx += b[i] * x[i];
    }
    return 0.5 * xax - bx;
}

}  // namespace gabp

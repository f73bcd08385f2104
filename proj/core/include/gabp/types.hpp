#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gabp {

using Vector = std::vector<double>;

inline double inf_norm(const Vector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Convergence test shared by every iterative method in this library:
/// a step is converged when the largest per-component change is within
/// epsilon relative to the iterate scale, max(1, ||x||_inf). The floor of 1
/// keeps the test meaningful for solutions near zero.
inline bool step_converged(double delta, const Vector& x, double epsilon) {
    return delta <= epsilon * std::max(1.0, inf_norm(x));
}

}  // namespace gabp

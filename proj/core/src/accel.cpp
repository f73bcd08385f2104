#include "gabp/accel.hpp"

namespace gabp {

Vector aitken_extrapolate(const Vector& x0, const Vector& x1, const Vector& x2,
                          double guard_tol) {
    if (x0.size() != x1.size() || x1.size() != x2.size())
        throw DimensionMismatchError("aitken_extrapolate: iterates have different lengths");
    Vector y(x2.size());
    for (std::size_t c = 0; c < y.size(); ++c) {
        const double den = x2[c] - 2.0 * x1[c] + x0[c];
        if (std::abs(den) <= guard_tol * (1.0 + std::abs(x2[c]))) {
            y[c] = x2[c];
        } else {
            const double d = x1[c] - x0[c];
            y[c] = x0[c] - d * d / den;
        }
    }
    return y;
}

}  // namespace gabp

#pragma once

#include <cmath>
#include <utility>

#include "gabp/errors.hpp"
#include "gabp/types.hpp"

namespace gabp {

/// Componentwise Aitken delta-squared extrapolation of three consecutive
/// iterates. Components whose second difference satisfies
/// |x2 - 2 x1 + x0| <= guard_tol * (1 + |x2|) pass through x2 unchanged.
Vector aitken_extrapolate(const Vector& x0, const Vector& x1, const Vector& x2,
                          double guard_tol = 1e-12);

enum class FixedPointStatus { Converged, MaxIterationsExceeded, Diverged };

struct FixedPointResult {
    Vector x;
    int cycles = 0;       // delta-squared cycles (the reported iteration count)
    int rounds = 0;       // underlying solver rounds executed (2 per full cycle)
    FixedPointStatus status = FixedPointStatus::MaxIterationsExceeded;
    bool converged = false;
};

/// Steffensen's iterations around a deterministic one-round map x -> step(x).
/// Each cycle runs two rounds and replaces the iterate with the Aitken
/// extrapolate; convergence is tested after every round with the shared
/// step_converged criterion, so a run may finish mid-cycle. The iteration
/// count reported is the number of cycles.
///
/// guard_tol defaults to 0 here (pass-through only on an exactly zero second
/// difference): near-cancellation is allowed to blow up and is then reported
/// as Diverged, which is the honest outcome for sequences the extrapolation
/// cannot handle.
template <class Step>
FixedPointResult steffensen_run(Step&& step, Vector x0, double epsilon, int max_cycles,
                                double guard_tol = 0.0) {
    FixedPointResult res;
    if (epsilon <= 0.0) throw InvalidArgumentError("epsilon must be positive");
    while (res.cycles < max_cycles) {
        ++res.cycles;
        Vector x1 = step(x0);
        ++res.rounds;
        if (!all_finite(x1)) {
            res.x = std::move(x0);
            res.status = FixedPointStatus::Diverged;
            return res;
        }
        if (step_converged(max_abs_diff(x1, x0), x1, epsilon)) {
            res.x = std::move(x1);
            res.status = FixedPointStatus::Converged;
            res.converged = true;
            return res;
        }
        Vector x2 = step(x1);
        ++res.rounds;
        if (!all_finite(x2)) {
            res.x = std::move(x1);
            res.status = FixedPointStatus::Diverged;
            return res;
        }
        if (step_converged(max_abs_diff(x2, x1), x2, epsilon)) {
            res.x = std::move(x2);
            res.status = FixedPointStatus::Converged;
            res.converged = true;
            return res;
        }
        x0 = aitken_extrapolate(x0, x1, x2, guard_tol);
        if (!all_finite(x0)) {
            res.x = std::move(x2);
            res.status = FixedPointStatus::Diverged;
            return res;
        }
    }
    res.x = std::move(x0);
    return res;
}

}  // namespace gabp

#pragma once

#include <cstdint>
#include <vector>

#include "chfif/refinement.hpp"

namespace chfif {

struct EvalResult {
    double f1 = 0.0;
    double f2 = 0.0;
    /// Certified sup-norm bound on the deviation from the true attractor values.
    double error_bound = 0.0;
};

/// Evaluates f at an arbitrary abscissa by unwinding the functional equation
/// `depth` times: walks x backward through the inverse L maps, seeds with the
/// piecewise-linear interpolant of the data, then folds forward through the
/// F maps. Node abscissae come back exact up to round-off.
EvalResult evaluate_at(const ChfifSystem& sys, double x, int depth = 60);

/// Smallest depth whose certified error bound is at or below `target`.
/// Throws evaluation_too_coarse when no practical depth reaches it.
int depth_for_error_bound(const ChfifSystem& sys, double target);

/// Random-iteration rendering of the attractor. Starts at the first data node,
/// discards a burn-in of 20 iterates, then emits `count` points. Deterministic
/// in (seed, count).
std::vector<Point3> chaos_game(const ChfifSystem& sys, std::size_t count, std::uint64_t seed);

/// Max residual of the two-map composition identities over every code pair
/// (i1, i2) and every grid abscissa. When the grid carries the abscissae of a
/// refinement level, the left-hand sides are looked up in the refinement two
/// levels deeper, which matches the image arithmetic bit for bit; otherwise
/// they go through evaluate_at at `eval_depth`. Pointwise evaluation of a
/// non-Lipschitz attractor at a rounded abscissa carries noise of order
/// omega(f; ulp), so only the table route resolves residuals near 1e-12.
double composition_check(const ChfifSystem& sys, const SampledFunction& grid,
                         int eval_depth = 60);

/// Max residual of f(L_n(x)) = F_n(x, f(x)) with both sides taken from exact
/// refinement tables at `depth` and `depth`+1.
double functional_equation_residual(const ChfifSystem& sys, int depth,
                                    const RefineLimits& limits = RefineLimits::from_env());

}  // namespace chfif

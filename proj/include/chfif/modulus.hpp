#pragma once

#include <vector>

#include "chfif/refinement.hpp"

namespace chfif {

struct ModulusEstimate {
    std::vector<double> t_values;
    std::vector<double> omega_values;  // sup-difference estimates, one per t
    double fitted_exponent = 0.0;
};

/// Modulus of continuity over the sample grid: for each t, the sup of
/// |f(x) - f(x')| over grid pairs with |x - x'| < t. The sample's certified
/// error bound is added (twice, once per endpoint) so the estimate is
/// conservative. The exponent is fit on log-log points, dropping the two
/// largest and two smallest t when enough remain.
///
/// Requires the grid spacing to be finer than min(t)/10; throws
/// grid_too_coarse otherwise.
ModulusEstimate modulus_of_continuity(const SampledFunction& samples, Component component,
                                      std::vector<double> t_values);

}  // namespace chfif

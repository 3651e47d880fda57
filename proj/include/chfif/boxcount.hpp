#pragma once

#include <cstddef>
#include <vector>

#include "chfif/errors.hpp"

namespace chfif {

struct BoxCountEstimate {
    std::vector<double> scales;        // box sizes, coarse to fine
    std::vector<std::size_t> counts;   // occupied boxes per scale
    double slope = 0.0;                // fitted dimension estimate
    double fit_r2 = 0.0;
};

/// Box-counting dimension estimate for points pre-normalized to the unit
/// square. Grids are dyadic (side 2^-e) anchored at the origin; every dyadic
/// scale inside [min_scale, max_scale] is counted, coarsest first, capped at
/// `levels`. The slope fit drops the two coarsest and two finest scales when
/// enough remain.
BoxCountEstimate box_dimension(const std::vector<double>& xs, const std::vector<double>& ys,
                               double min_scale, double max_scale, int levels);

}  // namespace chfif

#pragma once

#include <cstddef>
#include <vector>

#include "chfif/model.hpp"

namespace chfif {

/// Caps on refinement work. `max_points` defaults to the CHFIF_MAX_POINTS
/// environment variable (5 million when unset or unparseable).
struct RefineLimits {
    int max_depth = 12;
    std::size_t max_points = 5'000'000;

    static RefineLimits from_env();
};

/// The j-fold images of the data nodes under all maps, sorted by x.
/// depth 0 is the data itself, bit for bit; each deeper set contains the
/// previous one, bit for bit.
struct RefinedPointSet {
    int depth = 0;
    std::vector<Point3> points;
};

enum class Component { f1, f2 };

/// A finite graph sample of f = (f1, f2). Grid values at refinement abscissae
/// are exact; between grid points the true function deviates by at most
/// `error_bound` in either component.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> f1_values;
    std::vector<double> f2_values;
    double error_bound = 0.0;

    std::size_t size() const { return grid.size(); }
};

/// Coincident-abscissa tolerance used when merging refinement rounds:
/// 1e-12 relative to the domain length.
double dedup_tolerance(const ChfifSystem& sys);

RefinedPointSet refine(const ChfifSystem& sys, int depth,
                       const RefineLimits& limits = RefineLimits::from_env());

SampledFunction sample_graph(const ChfifSystem& sys, int depth,
                             const RefineLimits& limits = RefineLimits::from_env());

}  // namespace chfif

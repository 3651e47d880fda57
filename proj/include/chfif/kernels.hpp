#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chfif/refinement.hpp"

// Data-parallel inner loops, each in a plain serial form and an OpenMP form.
// The serial versions are the reference implementations the tests compare
// against; results are bit-identical between the two regardless of thread
// count (outputs are written to disjoint slots, reductions are exact maxima).

namespace chfif::kernels {

/// One refinement round: images of `in` under every map, map-major layout
/// (out[(n-1)*in.size() + i] = omega_n(in[i])). `out` is resized.
void map_images_serial(const ChfifSystem& sys, std::span<const Point3> in,
                       std::vector<Point3>& out);
void map_images_parallel(const ChfifSystem& sys, std::span<const Point3> in,
                         std::vector<Point3>& out);

/// Max over points p of level_j and maps n of the deviation between
/// omega_n(p) and the matching entry of level_j1.
double functional_residual_serial(const ChfifSystem& sys, const RefinedPointSet& level_j,
                                  const RefinedPointSet& level_j1);
double functional_residual_parallel(const ChfifSystem& sys, const RefinedPointSet& level_j,
                                    const RefinedPointSet& level_j1);

/// Max residual of the two-map composition identities over all code pairs and
/// grid abscissae, left sides evaluated pointwise at `eval_depth`.
double composition_residual_serial(const ChfifSystem& sys, const SampledFunction& grid,
                                   int eval_depth);
double composition_residual_parallel(const ChfifSystem& sys, const SampledFunction& grid,
                                     int eval_depth);

/// Same identities with the left sides looked up in a refinement table that
/// contains every two-map image of the grid abscissae.
double composition_table_residual_serial(const ChfifSystem& sys, const SampledFunction& grid,
                                         const RefinedPointSet& table);
double composition_table_residual_parallel(const ChfifSystem& sys, const SampledFunction& grid,
                                           const RefinedPointSet& table);

/// Occupied-box counts on dyadic grids of side 2^-e for each exponent.
/// Points must lie in the unit square.
void box_counts_serial(std::span<const double> xs, std::span<const double> ys,
                       std::span<const int> exponents, std::vector<std::size_t>& counts);
void box_counts_parallel(std::span<const double> xs, std::span<const double> ys,
                         std::span<const int> exponents, std::vector<std::size_t>& counts);

/// omegas[i] = sup over grid pairs with |x - x'| < ts[i] of |v - v'|.
/// The serial form is the brute-force pair scan; the parallel form slides a
/// monotonic-deque window per t.
void modulus_sweep_serial(std::span<const double> xs, std::span<const double> vs,
                          std::span<const double> ts, std::vector<double>& omegas);
void modulus_sweep_parallel(std::span<const double> xs, std::span<const double> vs,
                            std::span<const double> ts, std::vector<double>& omegas);

/// Max over i of |f_component(xs[i]) - ref[i]|, f evaluated on `sys` at
/// `eval_depth`.
double eval_deviation_serial(const ChfifSystem& sys, std::span<const double> xs,
                             std::span<const double> ref, Component component, int eval_depth);
double eval_deviation_parallel(const ChfifSystem& sys, std::span<const double> xs,
                               std::span<const double> ref, Component component,
                               int eval_depth);

}  // namespace chfif::kernels

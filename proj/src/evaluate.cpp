#include "chfif/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "chfif/kernels.hpp"

namespace chfif {

namespace {

// Piecewise-linear interpolant of the data nodes, the seed for the backward
// unwinding.
std::pair<double, double> linear_seed(const ChfifSystem& sys, double x) {
    const int n = sys.locate_interval(x);
    const auto& d = sys.data();
    const double t = (x - d.x(n - 1)) / (d.x(n) - d.x(n - 1));
    return {d.y(n - 1) + t * (d.y(n) - d.y(n - 1)), d.z(n - 1) + t * (d.z(n) - d.z(n - 1))};
}

}  // namespace

EvalResult evaluate_at(const ChfifSystem& sys, double x, int depth) {
    if (depth < 1) {
        raise(Errc::index_out_of_range, "evaluation depth must be >= 1, got " + std::to_string(depth));
    }

    std::vector<int> address(static_cast<std::size_t>(depth));
    std::vector<double> walk(static_cast<std::size_t>(depth) + 1);
    sys.locate_interval(x);  // rejects out-of-domain abscissae
    walk[0] = std::clamp(x, sys.x0(), sys.xN());
    for (int i = 0; i < depth; ++i) {
        const int n = sys.locate_interval(walk[static_cast<std::size_t>(i)]);
        address[static_cast<std::size_t>(i)] = n;
        walk[static_cast<std::size_t>(i) + 1] = sys.map_L_inverse(n, walk[static_cast<std::size_t>(i)]);
    }

    auto [y, z] = linear_seed(sys, walk[static_cast<std::size_t>(depth)]);
    for (int i = depth - 1; i >= 0; --i) {
        auto [ny, nz] = sys.map_F(address[static_cast<std::size_t>(i)],
                                  walk[static_cast<std::size_t>(i) + 1], y, z);
        y = ny;
        z = nz;
    }
    return {y, z, sys.certified_error_bound(depth)};
}

int depth_for_error_bound(const ChfifSystem& sys, double target) {
    constexpr int kMaxDepth = 200'000;
    double bound = sys.seed_spread_bound();
    const double s = sys.weighted_contraction();
    int depth = 1;
    bound *= s;
    while (bound > target && depth < kMaxDepth) {
        bound *= s;
        ++depth;
    }
    if (bound > target) {
        raise(Errc::evaluation_too_coarse,
              "certified bound cannot reach " + detail::format_double(target) +
                  " within depth " + std::to_string(kMaxDepth));
    }
    return depth;
}

std::vector<Point3> chaos_game(const ChfifSystem& sys, std::size_t count, std::uint64_t seed) {
    if (count < 1) raise(Errc::too_few_points, "chaos game needs count >= 1");
    constexpr std::size_t kBurnIn = 20;
    std::mt19937_64 rng(seed);
    const auto n_maps = static_cast<std::uint64_t>(sys.map_count());

    Point3 pt{sys.data().x(0), sys.data().y(0), sys.data().z(0)};
    std::vector<Point3> out;
    out.reserve(count);
    for (std::size_t i = 0; i < kBurnIn + count; ++i) {
        const int n = static_cast<int>(rng() % n_maps) + 1;
        pt = sys.map_omega(n, pt);
        if (i >= kBurnIn) out.push_back(pt);
    }
    return out;
}

namespace {

// A grid produced by sample_graph has the abscissae of some refinement level;
// recover that depth so the identity's left sides can be looked up exactly.
int refinement_depth_of(const ChfifSystem& sys, const SampledFunction& grid) {
    const auto n_maps = static_cast<std::size_t>(sys.map_count());
    std::size_t expected = n_maps + 1;
    int depth = 0;
    while (expected < grid.size() && depth < 40) {
        expected = n_maps * (expected - 1) + 1;
        ++depth;
    }
    if (expected != grid.size()) return -1;
    RefineLimits lim;
    lim.max_depth = depth;
    lim.max_points = grid.size() + 1;
    const RefinedPointSet ref = refine(sys, depth, lim);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (ref.points[i].x != grid.grid[i]) return -1;
    }
    return depth;
}

}  // namespace

double composition_check(const ChfifSystem& sys, const SampledFunction& grid, int eval_depth) {
    if (grid.size() == 0) raise(Errc::too_few_points, "empty grid");
    const int depth = refinement_depth_of(sys, grid);
    if (depth >= 0) {
        // exact route: every two-map image of a grid abscissa is an abscissa of
        // the refinement two levels deeper, with bit-identical arithmetic
        RefineLimits lim = RefineLimits::from_env();
        lim.max_depth = depth + 2;
        lim.max_points = std::max(lim.max_points, grid.size() * static_cast<std::size_t>(sys.map_count()) *
                                                      static_cast<std::size_t>(sys.map_count()));
        const RefinedPointSet table = refine(sys, depth + 2, lim);
        return kernels::composition_table_residual_parallel(sys, grid, table);
    }
    return kernels::composition_residual_parallel(sys, grid, eval_depth);
}

double functional_equation_residual(const ChfifSystem& sys, int depth,
                                    const RefineLimits& limits) {
    RefineLimits deeper = limits;
    deeper.max_depth = std::max(limits.max_depth, depth + 1);
    const RefinedPointSet level_j = refine(sys, depth, limits);
    const RefinedPointSet level_j1 = refine(sys, depth + 1, deeper);
    return kernels::functional_residual_parallel(sys, level_j, level_j1);
}

}  // namespace chfif

#include "chfif/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>

#include "chfif/evaluate.hpp"

namespace chfif::kernels {

namespace {

// Tolerant lookup of an abscissa in a sorted refinement table.
std::size_t nearest_index(const std::vector<Point3>& pts, double x) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const Point3& p, double v) { return p.x < v; });
    if (it == pts.end()) return pts.size() - 1;
    std::size_t idx = static_cast<std::size_t>(it - pts.begin());
    if (idx > 0 && std::abs(pts[idx - 1].x - x) < std::abs(pts[idx].x - x)) --idx;
    return idx;
}

double residual_at(const ChfifSystem& sys, const RefinedPointSet& level_j,
                   const RefinedPointSet& level_j1, std::size_t flat) {
    const std::size_t count = level_j.points.size();
    const int n = static_cast<int>(flat / count) + 1;
    const Point3& src = level_j.points[flat % count];
    const Point3 img = sys.map_omega(n, src);
    const Point3& hit = level_j1.points[nearest_index(level_j1.points, img.x)];
    return std::max(std::abs(img.y - hit.y), std::abs(img.z - hit.z));
}

struct PairResidual {
    const ChfifSystem& sys;
    const SampledFunction& grid;
    int eval_depth;                        // used when table == nullptr
    const RefinedPointSet* table = nullptr;

    double operator()(std::size_t flat) const {
        const int n_maps = sys.map_count();
        const std::size_t g = flat % grid.size();
        const std::size_t pair = flat / grid.size();
        const int i1 = static_cast<int>(pair % static_cast<std::size_t>(n_maps)) + 1;
        const int i2 = static_cast<int>(pair / static_cast<std::size_t>(n_maps)) + 1;

        const double x = grid.grid[g];
        const double f1 = grid.f1_values[g];
        const double f2 = grid.f2_values[g];

        const double inner_y = sys.alpha(i1) * f1 + sys.beta(i1) * f2 + sys.p_at(i1, x);
        const double inner_z = sys.gamma(i1) * f2 + sys.q_at(i1, x);
        const double lx = sys.map_L(i1, x);
        const double rhs1 = sys.alpha(i2) * inner_y + sys.beta(i2) * inner_z + sys.p_at(i2, lx);
        const double rhs2 = sys.gamma(i2) * inner_z + sys.q_at(i2, lx);

        const double llx = sys.map_L(i2, lx);
        double lhs1, lhs2;
        if (table) {
            const Point3& hit = table->points[nearest_index(table->points, llx)];
            lhs1 = hit.y;
            lhs2 = hit.z;
        } else {
            const EvalResult lhs = evaluate_at(sys, llx, eval_depth);
            lhs1 = lhs.f1;
            lhs2 = lhs.f2;
        }
        return std::max(std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2));
    }
};

std::uint64_t box_key(double x, double y, int exponent) {
    const double m = std::ldexp(1.0, exponent);
    const std::uint64_t side = std::uint64_t{1} << exponent;
    auto cell = [&](double v) {
        const double f = std::floor(v * m);
        if (f < 0.0) return std::uint64_t{0};
        const auto c = static_cast<std::uint64_t>(f);
        return std::min(c, side - 1);
    };
    return (cell(x) << 32) | cell(y);
}

std::size_t count_boxes(std::span<const double> xs, std::span<const double> ys, int exponent) {
    std::vector<std::uint64_t> keys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) keys[i] = box_key(xs[i], ys[i], exponent);
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

double modulus_brute(std::span<const double> xs, std::span<const double> vs, double t) {
    double best = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size() && xs[j] - xs[i] < t; ++j) {
            best = std::max(best, std::abs(vs[j] - vs[i]));
        }
    }
    return best;
}

double modulus_window(std::span<const double> xs, std::span<const double> vs, double t) {
    std::deque<std::size_t> maxdq, mindq;
    double best = 0.0;
    std::size_t lo = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        while (!maxdq.empty() && vs[maxdq.back()] <= vs[j]) maxdq.pop_back();
        maxdq.push_back(j);
        while (!mindq.empty() && vs[mindq.back()] >= vs[j]) mindq.pop_back();
        mindq.push_back(j);
        while (xs[j] - xs[lo] >= t) {
            if (maxdq.front() == lo) maxdq.pop_front();
            if (mindq.front() == lo) mindq.pop_front();
            ++lo;
        }
        best = std::max(best, vs[maxdq.front()] - vs[mindq.front()]);
    }
    return best;
}

double eval_component(const ChfifSystem& sys, double x, Component c, int depth) {
    const EvalResult r = evaluate_at(sys, x, depth);
    return c == Component::f1 ? r.f1 : r.f2;
}

}  // namespace

void map_images_serial(const ChfifSystem& sys, std::span<const Point3> in,
                       std::vector<Point3>& out) {
    const int n_maps = sys.map_count();
    const std::size_t count = in.size();
    out.resize(count * static_cast<std::size_t>(n_maps));
    for (int n = 1; n <= n_maps; ++n) {
        for (std::size_t i = 0; i < count; ++i) {
            out[static_cast<std::size_t>(n - 1) * count + i] = sys.map_omega(n, in[i]);
        }
    }
}

void map_images_parallel(const ChfifSystem& sys, std::span<const Point3> in,
                         std::vector<Point3>& out) {
    const int n_maps = sys.map_count();
    const std::size_t count = in.size();
    out.resize(count * static_cast<std::size_t>(n_maps));
    const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t flat = 0; flat < total; ++flat) {
        const auto u = static_cast<std::size_t>(flat);
        const int n = static_cast<int>(u / count) + 1;
        out[u] = sys.map_omega(n, in[u % count]);
    }
}

double functional_residual_serial(const ChfifSystem& sys, const RefinedPointSet& level_j,
                                  const RefinedPointSet& level_j1) {
    const std::size_t total = level_j.points.size() * static_cast<std::size_t>(sys.map_count());
    double worst = 0.0;
    for (std::size_t flat = 0; flat < total; ++flat) {
        worst = std::max(worst, residual_at(sys, level_j, level_j1, flat));
    }
    return worst;
}

double functional_residual_parallel(const ChfifSystem& sys, const RefinedPointSet& level_j,
                                    const RefinedPointSet& level_j1) {
    const auto total =
        static_cast<std::int64_t>(level_j.points.size() * static_cast<std::size_t>(sys.map_count()));
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t flat = 0; flat < total; ++flat) {
        worst = std::max(worst, residual_at(sys, level_j, level_j1,
                                            static_cast<std::size_t>(flat)));
    }
    return worst;
}

double composition_residual_serial(const ChfifSystem& sys, const SampledFunction& grid,
                                   int eval_depth) {
    const PairResidual body{sys, grid, eval_depth};
    const std::size_t pairs =
        static_cast<std::size_t>(sys.map_count()) * static_cast<std::size_t>(sys.map_count());
    double worst = 0.0;
    for (std::size_t flat = 0; flat < pairs * grid.size(); ++flat) {
        worst = std::max(worst, body(flat));
    }
    return worst;
}

double composition_residual_parallel(const ChfifSystem& sys, const SampledFunction& grid,
                                     int eval_depth) {
    const PairResidual body{sys, grid, eval_depth};
    const std::size_t pairs =
        static_cast<std::size_t>(sys.map_count()) * static_cast<std::size_t>(sys.map_count());
    const auto total = static_cast<std::int64_t>(pairs * grid.size());
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t flat = 0; flat < total; ++flat) {
        worst = std::max(worst, body(static_cast<std::size_t>(flat)));
    }
    return worst;
}

double composition_table_residual_serial(const ChfifSystem& sys, const SampledFunction& grid,
                                         const RefinedPointSet& table) {
    const PairResidual body{sys, grid, 0, &table};
    const std::size_t pairs =
        static_cast<std::size_t>(sys.map_count()) * static_cast<std::size_t>(sys.map_count());
    double worst = 0.0;
    for (std::size_t flat = 0; flat < pairs * grid.size(); ++flat) {
        worst = std::max(worst, body(flat));
    }
    return worst;
}

double composition_table_residual_parallel(const ChfifSystem& sys, const SampledFunction& grid,
                                           const RefinedPointSet& table) {
    const PairResidual body{sys, grid, 0, &table};
    const std::size_t pairs =
        static_cast<std::size_t>(sys.map_count()) * static_cast<std::size_t>(sys.map_count());
    const auto total = static_cast<std::int64_t>(pairs * grid.size());
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t flat = 0; flat < total; ++flat) {
        worst = std::max(worst, body(static_cast<std::size_t>(flat)));
    }
    return worst;
}

void box_counts_serial(std::span<const double> xs, std::span<const double> ys,
                       std::span<const int> exponents, std::vector<std::size_t>& counts) {
    counts.resize(exponents.size());
    for (std::size_t s = 0; s < exponents.size(); ++s) {
        counts[s] = count_boxes(xs, ys, exponents[s]);
    }
}

void box_counts_parallel(std::span<const double> xs, std::span<const double> ys,
                         std::span<const int> exponents, std::vector<std::size_t>& counts) {
    counts.resize(exponents.size());
    const auto total = static_cast<std::int64_t>(exponents.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < total; ++s) {
        counts[static_cast<std::size_t>(s)] = count_boxes(xs, ys, exponents[static_cast<std::size_t>(s)]);
    }
}

void modulus_sweep_serial(std::span<const double> xs, std::span<const double> vs,
                          std::span<const double> ts, std::vector<double>& omegas) {
    omegas.resize(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) omegas[i] = modulus_brute(xs, vs, ts[i]);
}

void modulus_sweep_parallel(std::span<const double> xs, std::span<const double> vs,
                            std::span<const double> ts, std::vector<double>& omegas) {
    omegas.resize(ts.size());
    const auto total = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) {
        omegas[static_cast<std::size_t>(i)] = modulus_window(xs, vs, ts[static_cast<std::size_t>(i)]);
    }
}

double eval_deviation_serial(const ChfifSystem& sys, std::span<const double> xs,
                             std::span<const double> ref, Component component, int eval_depth) {
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        worst = std::max(worst, std::abs(eval_component(sys, xs[i], component, eval_depth) - ref[i]));
    }
    return worst;
}

double eval_deviation_parallel(const ChfifSystem& sys, std::span<const double> xs,
                               std::span<const double> ref, Component component,
                               int eval_depth) {
    double worst = 0.0;
    const auto total = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::int64_t i = 0; i < total; ++i) {
        const auto u = static_cast<std::size_t>(i);
        worst = std::max(worst, std::abs(eval_component(sys, xs[u], component, eval_depth) - ref[u]));
    }
    return worst;
}

}  // namespace chfif::kernels

// Times the serial reference kernels against the OpenMP ones on a fixed
// system and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chfif/evaluate.hpp"
#include "chfif/kernels.hpp"
#include "chfif/model.hpp"
#include "chfif/refinement.hpp"

namespace {

using namespace chfif;

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int depth = 10;
    if (argc > 1) depth = std::stoi(argv[1]);

    const GeneralizedDataSet data = validate_data({{0.0, 0.0, 10.0},
                                                   {30.0, 90.0, 40.0},
                                                   {60.0, 70.0, 80.0},
                                                   {100.0, 20.0, 30.0}});
    const ChfifSystem sys = build_system(data, {{0.2, 0.5, 0.3}, {0.3, 0.4, 0.1}, {0.6, 0.2, 0.5}});

#ifdef _OPENMP
    std::printf("threads: %d, refinement depth: %d\n", omp_get_max_threads(), depth);
#else
    std::printf("threads: 1 (OpenMP off), refinement depth: %d\n", depth);
#endif
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    RefineLimits lim;
    lim.max_depth = depth + 1;
    lim.max_points = 50'000'000;
    const RefinedPointSet level_j = refine(sys, depth, lim);
    const RefinedPointSet level_j1 = refine(sys, depth + 1, lim);

    {
        std::vector<Point3> out_s, out_p;
        const double ts = time_ms([&] { kernels::map_images_serial(sys, level_j.points, out_s); });
        const double tp = time_ms([&] { kernels::map_images_parallel(sys, level_j.points, out_p); });
        bool same = out_s.size() == out_p.size();
        for (std::size_t i = 0; same && i < out_s.size(); ++i) {
            same = out_s[i].x == out_p[i].x && out_s[i].y == out_p[i].y && out_s[i].z == out_p[i].z;
        }
        report("map_images", ts, tp, same);
    }
    {
        double rs = 0, rp = 0;
        const double ts =
            time_ms([&] { rs = kernels::functional_residual_serial(sys, level_j, level_j1); });
        const double tp =
            time_ms([&] { rp = kernels::functional_residual_parallel(sys, level_j, level_j1); });
        report("functional_residual", ts, tp, rs == rp);
    }
    {
        const SampledFunction grid = sample_graph(sys, 4);
        double rs = 0, rp = 0;
        const double ts = time_ms([&] { rs = kernels::composition_residual_serial(sys, grid, 60); });
        const double tp =
            time_ms([&] { rp = kernels::composition_residual_parallel(sys, grid, 60); });
        report("composition_residual", ts, tp, rs == rp);
    }
    {
        const SampledFunction s = sample_graph(sys, depth, lim);
        std::vector<double> xs(s.size()), ys(s.size());
        double v_lo = s.f2_values[0], v_hi = s.f2_values[0];
        for (double v : s.f2_values) {
            v_lo = std::min(v_lo, v);
            v_hi = std::max(v_hi, v);
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            xs[i] = (s.grid[i] - s.grid.front()) / (s.grid.back() - s.grid.front());
            ys[i] = (s.f2_values[i] - v_lo) / (v_hi - v_lo);
        }
        const std::vector<int> exponents{2, 3, 4, 5, 6, 7, 8, 9};
        std::vector<std::size_t> cs, cp;
        const double ts = time_ms([&] { kernels::box_counts_serial(xs, ys, exponents, cs); });
        const double tp = time_ms([&] { kernels::box_counts_parallel(xs, ys, exponents, cp); });
        report("box_counts", ts, tp, cs == cp);
    }
    {
        const SampledFunction s = sample_graph(sys, 7);
        const std::vector<double> ts_list{1.0, 2.0, 4.0, 8.0, 16.0};
        std::vector<double> ws, wp;
        const double ts =
            time_ms([&] { kernels::modulus_sweep_serial(s.grid, s.f1_values, ts_list, ws); });
        const double tp =
            time_ms([&] { kernels::modulus_sweep_parallel(s.grid, s.f1_values, ts_list, wp); });
        report("modulus_sweep", ts, tp, ws == wp);
    }
    return 0;
}

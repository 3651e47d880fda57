#include "chfif/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "chfif/kernels.hpp"

namespace chfif {

ModulusEstimate modulus_of_continuity(const SampledFunction& samples, Component component,
                                      std::vector<double> t_values) {
    if (samples.size() < 2) raise(Errc::too_few_points, "need at least 2 samples");
    if (t_values.empty()) raise(Errc::degenerate_scales, "no gap widths given");
    std::sort(t_values.begin(), t_values.end());
    if (!(t_values.front() > 0.0)) {
        raise(Errc::degenerate_scales, "gap widths must be positive");
    }

    double max_gap = 0.0;
    for (std::size_t i = 1; i < samples.grid.size(); ++i) {
        max_gap = std::max(max_gap, samples.grid[i] - samples.grid[i - 1]);
    }
    if (!(max_gap < t_values.front() / 10.0)) {
        raise(Errc::grid_too_coarse,
              "grid spacing " + detail::format_double(max_gap) + " is not below min(t)/10 = " +
                  detail::format_double(t_values.front() / 10.0));
    }

    const std::vector<double>& vals =
        component == Component::f1 ? samples.f1_values : samples.f2_values;

    ModulusEstimate est;
    est.t_values = std::move(t_values);
    kernels::modulus_sweep_parallel(samples.grid, vals, est.t_values, est.omega_values);

    // conservative: both compared values may each be off by the sample bound
    for (double& w : est.omega_values) w += 2.0 * samples.error_bound;

    std::size_t drop = 0;
    if (est.t_values.size() >= 7) {
        drop = 2;
    } else if (est.t_values.size() >= 5) {
        drop = 1;
    }
    double su = 0, sv = 0, suu = 0, suv = 0;
    double used = 0;
    for (std::size_t i = drop; i + drop < est.t_values.size(); ++i) {
        if (!(est.omega_values[i] > 0.0)) continue;
        const double u = std::log(est.t_values[i]);
        const double v = std::log(est.omega_values[i]);
        su += u;
        sv += v;
        suu += u * u;
        suv += u * v;
        used += 1.0;
    }
    if (used < 2.0) {
        raise(Errc::degenerate_scales, "not enough usable gap widths for an exponent fit");
    }
    est.fitted_exponent = (used * suv - su * sv) / (used * suu - su * su);
    return est;
}

}  // namespace chfif

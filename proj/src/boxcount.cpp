#include "chfif/boxcount.hpp"

#include <algorithm>
#include <cmath>

#include "chfif/kernels.hpp"

namespace chfif {

namespace {

// Least squares through (us, vs); returns (slope, r^2).
std::pair<double, double> fit_line(const std::vector<double>& us, const std::vector<double>& vs) {
    const auto n = static_cast<double>(us.size());
    double su = 0, sv = 0, suu = 0, suv = 0, svv = 0;
    for (std::size_t i = 0; i < us.size(); ++i) {
        su += us[i];
        sv += vs[i];
        suu += us[i] * us[i];
        suv += us[i] * vs[i];
        svv += vs[i] * vs[i];
    }
    const double den = n * suu - su * su;
    const double slope = (n * suv - su * sv) / den;
    const double var = n * svv - sv * sv;
    const double r2 = var > 0.0 ? (n * suv - su * sv) * (n * suv - su * sv) / (den * var) : 1.0;
    return {slope, r2};
}

// Drops the two coarsest and two finest entries when enough remain.
template <typename T>
std::vector<T> trim_ends(const std::vector<T>& v) {
    std::size_t drop = 0;
    if (v.size() >= 7) {
        drop = 2;
    } else if (v.size() >= 5) {
        drop = 1;
    }
    return std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(drop),
                          v.end() - static_cast<std::ptrdiff_t>(drop));
}

}  // namespace

BoxCountEstimate box_dimension(const std::vector<double>& xs, const std::vector<double>& ys,
                               double min_scale, double max_scale, int levels) {
    if (xs.size() != ys.size()) raise(Errc::length_mismatch, "x and y lists differ in length");
    if (xs.size() < 1000) {
        raise(Errc::too_few_points,
              "box counting needs at least 1000 points, got " + std::to_string(xs.size()));
    }
    if (!(min_scale > 0.0) || !(min_scale < max_scale) || max_scale > 1.0) {
        raise(Errc::degenerate_scales, "need 0 < min_scale < max_scale <= 1");
    }

    // dyadic exponents e with min_scale <= 2^-e <= max_scale, coarse first
    const int e_lo = std::max(0, static_cast<int>(std::ceil(-std::log2(max_scale) - 1e-9)));
    const int e_hi = static_cast<int>(std::floor(-std::log2(min_scale) + 1e-9));
    std::vector<int> exponents;
    for (int e = e_lo; e <= e_hi && static_cast<int>(exponents.size()) < levels; ++e) {
        if (e > 30) break;
        exponents.push_back(e);
    }
    if (exponents.size() < 3) {
        raise(Errc::degenerate_scales, "fewer than 3 dyadic scales between " +
                                           detail::format_double(min_scale) + " and " +
                                           detail::format_double(max_scale));
    }

    BoxCountEstimate est;
    kernels::box_counts_parallel(xs, ys, exponents, est.counts);
    est.scales.reserve(exponents.size());
    for (int e : exponents) est.scales.push_back(std::ldexp(1.0, -e));

    const std::vector<int> fit_exponents = trim_ends(exponents);
    const std::vector<std::size_t> fit_counts = trim_ends(est.counts);
    std::vector<double> us, vs;
    us.reserve(fit_exponents.size());
    vs.reserve(fit_exponents.size());
    for (std::size_t i = 0; i < fit_exponents.size(); ++i) {
        us.push_back(static_cast<double>(fit_exponents[i]) * std::log(2.0));  // log(1/scale)
        vs.push_back(std::log(static_cast<double>(fit_counts[i])));
    }
    auto [slope, r2] = fit_line(us, vs);
    est.slope = slope;
    est.fit_r2 = r2;
    return est;
}

}  // namespace chfif

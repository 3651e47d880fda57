#include "chfif/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace chfif {

namespace detail {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace detail

using detail::format_double;

GeneralizedDataSet GeneralizedDataSet::validate(std::vector<Point3> points) {
    if (points.size() < 2) {
        raise(Errc::too_few_points,
              "need at least 2 data points, got " + std::to_string(points.size()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point3& pt = points[i];
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y) || !std::isfinite(pt.z)) {
            raise(Errc::non_finite_value, "point " + std::to_string(i) + " = (" +
                                              format_double(pt.x) + ", " + format_double(pt.y) +
                                              ", " + format_double(pt.z) + ") is not finite");
        }
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i - 1].x < points[i].x)) {
            raise(Errc::non_increasing_abscissae,
                  "x[" + std::to_string(i) + "] = " + format_double(points[i].x) +
                      " <= x[" + std::to_string(i - 1) +
                      "] = " + format_double(points[i - 1].x));
        }
    }
    return GeneralizedDataSet(std::move(points));
}

GeneralizedDataSet validate_data(std::vector<Point3> points) {
    return GeneralizedDataSet::validate(std::move(points));
}

void IfsParameters::validate() const {
    if (beta.size() != alpha.size() || gamma.size() != alpha.size()) {
        raise(Errc::length_mismatch, "alpha/beta/gamma have lengths " +
                                         std::to_string(alpha.size()) + "/" +
                                         std::to_string(beta.size()) + "/" +
                                         std::to_string(gamma.size()));
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const std::string n = std::to_string(i + 1);  // 1-based, matching map indices
        if (!std::isfinite(alpha[i]) || !std::isfinite(beta[i]) || !std::isfinite(gamma[i])) {
            raise(Errc::non_finite_value, "parameters for subinterval " + n + " are not finite");
        }
        if (!(std::abs(alpha[i]) < 1.0)) {
            raise(Errc::parameter_constraint_violation,
                  "|alpha[" + n + "]| = " + format_double(std::abs(alpha[i])) + " >= 1");
        }
        if (!(std::abs(gamma[i]) < 1.0)) {
            raise(Errc::parameter_constraint_violation,
                  "|gamma[" + n + "]| = " + format_double(std::abs(gamma[i])) + " >= 1");
        }
        if (!(std::abs(beta[i]) + std::abs(gamma[i]) < 1.0)) {
            raise(Errc::parameter_constraint_violation,
                  "beta[" + n + "]+gamma[" + n +
                      "] = " + format_double(std::abs(beta[i]) + std::abs(gamma[i])) + " >= 1");
        }
    }
}

ChfifSystem::ChfifSystem(GeneralizedDataSet data, IfsParameters params)
    : data_(std::move(data)), params_(std::move(params)) {
    const int n_maps = data_.subintervals();
    if (params_.size() != n_maps) {
        raise(Errc::length_mismatch, "parameters cover " + std::to_string(params_.size()) +
                                         " subintervals, data has " + std::to_string(n_maps));
    }
    params_.validate();

    const double x0 = data_.x0();
    const double xN = data_.xN();
    const double y0 = data_.y(0);
    const double yN = data_.y(n_maps);
    const double z0 = data_.z(0);
    const double zN = data_.z(n_maps);
    const double span = xN - x0;

    L_.resize(n_maps);
    p_.resize(n_maps);
    q_.resize(n_maps);
    for (int i = 0; i < n_maps; ++i) {
        const double a = params_.alpha[i];
        const double b = params_.beta[i];
        const double g = params_.gamma[i];
        L_[i].scale = (data_.x(i + 1) - data_.x(i)) / span;
        L_[i].offset = data_.x(i);
        // join-up: F maps the domain endpoints onto consecutive nodes
        p_[i].at_x0 = data_.y(i) - a * y0 - b * z0;
        p_[i].at_xN = data_.y(i + 1) - a * yN - b * zN;
        q_[i].at_x0 = data_.z(i) - g * z0;
        q_[i].at_xN = data_.z(i + 1) - g * zN;
    }

    double max_alpha = 0.0, max_gamma = 0.0, max_ab = 0.0, max_p = 0.0, max_q = 0.0;
    for (int i = 0; i < n_maps; ++i) {
        max_alpha = std::max(max_alpha, std::abs(params_.alpha[i]));
        max_gamma = std::max(max_gamma, std::abs(params_.gamma[i]));
        max_ab = std::max(max_ab, std::abs(params_.alpha[i]) + std::abs(params_.beta[i]));
        max_p = std::max(max_p, p_[i].sup_abs());
        max_q = std::max(max_q, q_[i].sup_abs());
    }
    s_raw_ = std::max(max_ab, max_gamma);

    // Weight K > 0 making max(|dy|, K |dz|) contract under every F map even
    // when some |alpha| + |beta| >= 1. K = 1 whenever the plain sup norm
    // already contracts.
    weight_k_ = 1.0;
    if (max_ab >= 1.0) {
        for (int i = 0; i < n_maps; ++i) {
            const double denom = 1.0 - std::abs(params_.alpha[i]);
            weight_k_ = std::max(weight_k_, 2.0 * std::abs(params_.beta[i]) / denom);
        }
    }
    double contracted_ab = 0.0;
    for (int i = 0; i < n_maps; ++i) {
        contracted_ab = std::max(contracted_ab, std::abs(params_.alpha[i]) +
                                                    std::abs(params_.beta[i]) / weight_k_);
    }
    s_weighted_ = std::max(contracted_ab, max_gamma);

    f2_bound_ = max_q / (1.0 - max_gamma);
    double max_beta = 0.0;
    for (double b : params_.beta) max_beta = std::max(max_beta, std::abs(b));
    f1_bound_ = (max_p + max_beta * f2_bound_) / (1.0 - max_alpha);
    seed_spread_ = std::max(2.0 * f1_bound_, weight_k_ * 2.0 * f2_bound_);
}

std::size_t ChfifSystem::check_n(int n) const {
    if (n < 1 || n > map_count()) {
        raise(Errc::index_out_of_range, "map index " + std::to_string(n) + " outside [1, " +
                                            std::to_string(map_count()) + "]");
    }
    return static_cast<std::size_t>(n - 1);
}

double ChfifSystem::clamp_domain(double x) const {
    const double slack = 1e-9 * span();
    if (x < x0() - slack || x > xN() + slack) {
        raise(Errc::abscissa_out_of_domain, "x = " + detail::format_double(x) + " outside [" +
                                                detail::format_double(x0()) + ", " +
                                                detail::format_double(xN()) + "]");
    }
    return std::clamp(x, x0(), xN());
}

double ChfifSystem::map_L(int n, double x) const {
    const std::size_t i = check_n(n);
    x = clamp_domain(x);
    return L_[i].offset + L_[i].scale * (x - x0());
}

double ChfifSystem::map_L_inverse(int n, double x) const {
    const std::size_t i = check_n(n);
    const double t = x0() + (x - L_[i].offset) / L_[i].scale;
    return std::clamp(t, x0(), xN());
}

std::pair<double, double> ChfifSystem::map_F(int n, double x, double y, double z) const {
    const std::size_t i = check_n(n);
    x = clamp_domain(x);
    return {params_.alpha[i] * y + params_.beta[i] * z + p_[i].eval(x, x0(), xN()),
            params_.gamma[i] * z + q_[i].eval(x, x0(), xN())};
}

Point3 ChfifSystem::map_omega(int n, const Point3& pt) const {
    auto [fy, fz] = map_F(n, pt.x, pt.y, pt.z);
    return {map_L(n, pt.x), fy, fz};
}

double ChfifSystem::p_at(int n, double x) const {
    return p_[check_n(n)].eval(clamp_domain(x), x0(), xN());
}

double ChfifSystem::q_at(int n, double x) const {
    return q_[check_n(n)].eval(clamp_domain(x), x0(), xN());
}

int ChfifSystem::locate_interval(double x) const {
    x = clamp_domain(x);
    if (x <= x0()) return 1;
    const auto& pts = data_.points();
    int lo = 1, hi = map_count();
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (x <= pts[static_cast<std::size_t>(mid)].x) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

double ChfifSystem::join_up_residual() const {
    double worst = 0.0;
    for (int n = 1; n <= map_count(); ++n) {
        auto [ly, lz] = map_F(n, x0(), data_.y(0), data_.z(0));
        auto [ry, rz] = map_F(n, xN(), data_.y(map_count()), data_.z(map_count()));
        worst = std::max({worst, std::abs(ly - data_.y(n - 1)), std::abs(lz - data_.z(n - 1)),
                          std::abs(ry - data_.y(n)), std::abs(rz - data_.z(n))});
    }
    return worst;
}

ChfifSystem build_system(GeneralizedDataSet data, IfsParameters params) {
    return ChfifSystem(std::move(data), std::move(params));
}

}  // namespace chfif

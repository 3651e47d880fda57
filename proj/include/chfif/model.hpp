#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "chfif/errors.hpp"

// Core model: generalized interpolation data (x_i, y_i, z_i), the per-interval
// map parameters, and the assembled iterated function system whose attractor is
// the graph of the interpolant f = (f1, f2).
//
// Conventions used throughout the library:
//   - data node indices are 0-based (x_0 .. x_N),
//   - map / subinterval indices are 1-based (n in [1, N], interval I_n = [x_{n-1}, x_n]),
//     matching the usual notation for these systems and the diagnostics format.

namespace chfif {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

class GeneralizedDataSet {
public:
    /// Validates ordering and finiteness. Throws: too_few_points,
    /// non_increasing_abscissae, non_finite_value.
    static GeneralizedDataSet validate(std::vector<Point3> points);

    const std::vector<Point3>& points() const { return points_; }
    int subintervals() const { return static_cast<int>(points_.size()) - 1; }  // N

    double x(int i) const { return points_[static_cast<std::size_t>(i)].x; }
    double y(int i) const { return points_[static_cast<std::size_t>(i)].y; }
    double z(int i) const { return points_[static_cast<std::size_t>(i)].z; }

    double x0() const { return points_.front().x; }
    double xN() const { return points_.back().x; }
    double span() const { return xN() - x0(); }

private:
    explicit GeneralizedDataSet(std::vector<Point3> pts) : points_(std::move(pts)) {}
    std::vector<Point3> points_;
};

GeneralizedDataSet validate_data(std::vector<Point3> points);

/// Free variables alpha_n, gamma_n and constrained variables beta_n, one per
/// subinterval. Constraints: |alpha_n| < 1, |gamma_n| < 1, |beta_n| + |gamma_n| < 1.
struct IfsParameters {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> gamma;

    int size() const { return static_cast<int>(alpha.size()); }

    /// Throws parameter_constraint_violation or length_mismatch. Diagnostics
    /// name the exact constraint, e.g. "beta[1]+gamma[1] = 1.1 >= 1".
    void validate() const;
};

/// An affine function on [x0, xN] stored by its endpoint values, so join-up
/// conditions are met by construction.
struct AffineEndpoints {
    double at_x0 = 0.0;
    double at_xN = 0.0;

    double eval(double x, double x0, double xN) const {
        return at_x0 + (at_xN - at_x0) * ((x - x0) / (xN - x0));
    }
    double sup_abs() const { return std::max(std::abs(at_x0), std::abs(at_xN)); }
};

/// L_n(x) = offset + scale * (x - x0); offset equals x_{n-1}.
struct LinearMapCoeffs {
    double scale = 0.0;
    double offset = 0.0;
};

/// The assembled system: maps L_n (affine, onto I_n) and
/// F_n(x, y, z) = (alpha_n y + beta_n z + p_n(x), gamma_n z + q_n(x)),
/// with p_n, q_n solved from the join-up conditions.
///
/// Immutable after construction; all member functions are const and safe for
/// concurrent use.
class ChfifSystem {
public:
    ChfifSystem(GeneralizedDataSet data, IfsParameters params);

    const GeneralizedDataSet& data() const { return data_; }
    const IfsParameters& params() const { return params_; }
    int map_count() const { return data_.subintervals(); }

    double x0() const { return data_.x0(); }
    double xN() const { return data_.xN(); }
    double span() const { return data_.span(); }

    // Map evaluation, n is 1-based. Throws index_out_of_range /
    // abscissa_out_of_domain. Abscissae within 1e-9*span of the domain are
    // clamped rather than rejected, so refinement round-off cannot trip the
    // domain gate.
    double map_L(int n, double x) const;
    double map_L_inverse(int n, double x) const;
    std::pair<double, double> map_F(int n, double x, double y, double z) const;
    Point3 map_omega(int n, const Point3& pt) const;

    double p_at(int n, double x) const;
    double q_at(int n, double x) const;

    const AffineEndpoints& p(int n) const { return p_[check_n(n)]; }
    const AffineEndpoints& q(int n) const { return q_[check_n(n)]; }
    LinearMapCoeffs L_coeffs(int n) const { return L_[check_n(n)]; }

    double alpha(int n) const { return params_.alpha[check_n(n)]; }
    double beta(int n) const { return params_.beta[check_n(n)]; }
    double gamma(int n) const { return params_.gamma[check_n(n)]; }

    /// 1-based index of the subinterval containing x; a shared endpoint x_n
    /// resolves to the left interval I_n.
    int locate_interval(double x) const;

    /// max_n max(|alpha_n|+|beta_n|, |gamma_n|). May reach or exceed 1 even
    /// for valid parameters; certified bounds below use the weighted variant.
    double contraction_factor() const { return s_raw_; }

    /// Contraction factor < 1 of the F maps in the weighted max-norm
    /// max(|dy|, K |dz|); equals contraction_factor() whenever that is < 1.
    double weighted_contraction() const { return s_weighted_; }
    double weight_K() const { return weight_k_; }

    /// Certified sup-norm bounds on |f1| and |f2| over the whole domain.
    double f1_bound() const { return f1_bound_; }
    double f2_bound() const { return f2_bound_; }

    /// Diameter bound C of the seeded values in the weighted norm; the
    /// evaluation error after d backward steps is at most C * s^d.
    double seed_spread_bound() const { return seed_spread_; }
    double certified_error_bound(int depth) const {
        return seed_spread_ * std::pow(s_weighted_, depth);
    }

    /// Max endpoint deviation of F_n from the interpolation nodes.
    double join_up_residual() const;

private:
    std::size_t check_n(int n) const;
    double clamp_domain(double x) const;

    GeneralizedDataSet data_;
    IfsParameters params_;
    std::vector<LinearMapCoeffs> L_;
    std::vector<AffineEndpoints> p_;
    std::vector<AffineEndpoints> q_;

    double s_raw_ = 0.0;
    double s_weighted_ = 0.0;
    double weight_k_ = 1.0;
    double f1_bound_ = 0.0;
    double f2_bound_ = 0.0;
    double seed_spread_ = 0.0;
};

/// Solves the affine p_n, q_n from the four join-up equations and returns the
/// validated system.
ChfifSystem build_system(GeneralizedDataSet data, IfsParameters params);

inline double eval_L(const ChfifSystem& sys, int n, double x) { return sys.map_L(n, x); }
inline std::pair<double, double> eval_F(const ChfifSystem& sys, int n, double x, double y,
                                        double z) {
    return sys.map_F(n, x, y, z);
}

namespace detail {
std::string format_double(double v);
}

}  // namespace chfif

#include "chfif/insertion.hpp"

#include <cmath>
#include <limits>

namespace chfif {

using detail::format_double;

namespace {

void validate_overrides(const SplitOverrides& ov) {
    auto check_free = [](double v, const char* name) {
        if (!(std::abs(v) < 1.0)) {
            raise(Errc::parameter_constraint_violation,
                  std::string("|") + name + "| = " + format_double(std::abs(v)) + " >= 1");
        }
    };
    check_free(ov.alpha_l, "alpha_l");
    check_free(ov.alpha_r, "alpha_r");
    check_free(ov.gamma_l, "gamma_l");
    check_free(ov.gamma_r, "gamma_r");
    if (!(std::abs(ov.beta_l) + std::abs(ov.gamma_l) < 1.0)) {
        raise(Errc::parameter_constraint_violation,
              "beta_l+gamma_l = " + format_double(std::abs(ov.beta_l) + std::abs(ov.gamma_l)) +
                  " >= 1");
    }
    if (!(std::abs(ov.beta_r) + std::abs(ov.gamma_r) < 1.0)) {
        raise(Errc::parameter_constraint_violation,
              "beta_r+gamma_r = " + format_double(std::abs(ov.beta_r) + std::abs(ov.gamma_r)) +
                  " >= 1");
    }
}

double ratio_or_nan(double num, double den) {
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

// Affine function through (x_0, v_0) and (x_N, v_N), the carrier term of the
// split p/q relations.
double endpoint_line(const ChfifSystem& sys, double v0, double vN, double x) {
    return (vN * (x - sys.x0()) + v0 * (sys.xN() - x)) / (sys.xN() - sys.x0());
}

}  // namespace

InsertionSpec make_insertion_spec(const ChfifSystem& sys, double x_hat, double y_hat,
                                  double z_hat, std::optional<SplitOverrides> overrides) {
    if (!std::isfinite(x_hat) || !std::isfinite(y_hat) || !std::isfinite(z_hat)) {
        raise(Errc::non_finite_value, "inserted point is not finite");
    }
    if (!(sys.x0() < x_hat && x_hat < sys.xN())) {
        raise(Errc::abscissa_out_of_domain,
              "x^ = " + format_double(x_hat) + " outside (" + format_double(sys.x0()) + ", " +
                  format_double(sys.xN()) + ")");
    }
    const auto& d = sys.data();
    for (int i = 0; i <= sys.map_count(); ++i) {
        if (x_hat == d.x(i)) {
            raise(Errc::abscissa_collision,
                  "x^ = " + format_double(x_hat) + " coincides with node " + std::to_string(i));
        }
    }

    InsertionSpec spec;
    spec.x_hat = x_hat;
    spec.y_hat = y_hat;
    spec.z_hat = z_hat;
    spec.k = sys.locate_interval(x_hat);
    spec.rho_x = (x_hat - d.x(spec.k - 1)) / (d.x(spec.k) - d.x(spec.k - 1));
    spec.rho_y = ratio_or_nan(y_hat - d.y(spec.k - 1), d.y(spec.k) - d.y(spec.k - 1));
    spec.rho_z = ratio_or_nan(z_hat - d.z(spec.k - 1), d.z(spec.k) - d.z(spec.k - 1));
    if (overrides) {
        validate_overrides(*overrides);
        spec.overrides = overrides;
    }
    return spec;
}

SplitOverrides resolve_split_parameters(const ChfifSystem& sys, const InsertionSpec& spec) {
    if (spec.overrides) return *spec.overrides;
    SplitOverrides out;
    const double r = spec.rho_x;
    out.alpha_l = r * sys.alpha(spec.k);
    out.alpha_r = (1.0 - r) * sys.alpha(spec.k);
    out.beta_l = r * sys.beta(spec.k);
    out.beta_r = (1.0 - r) * sys.beta(spec.k);
    out.gamma_l = r * sys.gamma(spec.k);
    out.gamma_r = (1.0 - r) * sys.gamma(spec.k);
    return out;
}

ChfifSystem insert(const ChfifSystem& sys, const InsertionSpec& spec) {
    if (spec.k < 1 || spec.k > sys.map_count()) {
        raise(Errc::index_out_of_range, "split index " + std::to_string(spec.k));
    }
    if (!(spec.rho_x > 0.0 && spec.rho_x < 1.0)) {
        raise(Errc::abscissa_collision,
              "rho_x = " + format_double(spec.rho_x) + " outside (0, 1)");
    }
    const SplitOverrides split = resolve_split_parameters(sys, spec);

    std::vector<Point3> points = sys.data().points();
    points.insert(points.begin() + spec.k, Point3{spec.x_hat, spec.y_hat, spec.z_hat});

    IfsParameters params = sys.params();
    const auto at = static_cast<std::ptrdiff_t>(spec.k - 1);
    params.alpha[static_cast<std::size_t>(at)] = split.alpha_l;
    params.beta[static_cast<std::size_t>(at)] = split.beta_l;
    params.gamma[static_cast<std::size_t>(at)] = split.gamma_l;
    params.alpha.insert(params.alpha.begin() + at + 1, split.alpha_r);
    params.beta.insert(params.beta.begin() + at + 1, split.beta_r);
    params.gamma.insert(params.gamma.begin() + at + 1, split.gamma_r);

    return build_system(validate_data(std::move(points)), std::move(params));
}

const char* to_string(InsertionKind kind) {
    switch (kind) {
        case InsertionKind::node_node: return "node-node";
        case InsertionKind::node_knot: return "node-knot";
        case InsertionKind::knot_node: return "knot-node";
        case InsertionKind::knot_knot: return "knot-knot";
    }
    return "unknown";
}

InsertionClassification classify_insertion(const ChfifSystem& sys, double x_hat, double y_hat,
                                           double z_hat, double tol) {
    if (!(tol > 0.0)) raise(Errc::degenerate_scales, "classification tolerance must be positive");
    if (!(sys.x0() < x_hat && x_hat < sys.xN())) {
        raise(Errc::abscissa_out_of_domain, "x^ = " + format_double(x_hat));
    }
    for (int i = 0; i <= sys.map_count(); ++i) {
        if (std::abs(x_hat - sys.data().x(i)) <= tol) {
            raise(Errc::abscissa_collision, "x^ = " + format_double(x_hat) +
                                                " within tolerance of node " + std::to_string(i));
        }
    }

    const int depth = depth_for_error_bound(sys, tol / 10.0);
    const EvalResult at = evaluate_at(sys, x_hat, depth);

    const bool y_is_knot = std::abs(y_hat - at.f1) <= tol;
    const bool z_is_knot = std::abs(z_hat - at.f2) <= tol;

    InsertionClassification out;
    out.tolerance_used = tol;
    out.f1_at_x = at.f1;
    out.f2_at_x = at.f2;
    out.eval_error_bound = at.error_bound;
    if (y_is_knot && z_is_knot) {
        out.kind = InsertionKind::knot_knot;
    } else if (z_is_knot) {
        out.kind = InsertionKind::node_knot;
    } else if (y_is_knot) {
        out.kind = InsertionKind::knot_node;
    } else {
        out.kind = InsertionKind::node_node;
    }
    return out;
}

double split_L_identity_check(const ChfifSystem& sys, const InsertionSpec& spec) {
    const ChfifSystem inserted = insert(sys, spec);
    const int k = spec.k;
    const double r = spec.rho_x;
    const double xkm1 = sys.data().x(k - 1);
    const double xk = sys.data().x(k);

    double worst = 0.0;
    constexpr int kGridPoints = 100;
    for (int i = 0; i < kGridPoints; ++i) {
        const double x = sys.x0() + sys.span() * static_cast<double>(i) / (kGridPoints - 1);
        const double lk = sys.map_L(k, x);
        const double left = inserted.map_L(k, x);
        const double right = inserted.map_L(k + 1, x);
        worst = std::max(worst, std::abs(left - (r * lk + (1.0 - r) * xkm1)));
        worst = std::max(worst, std::abs(right - ((1.0 - r) * lk + r * xk)));
    }
    return worst;
}

double split_pq_relation_check(const ChfifSystem& sys, const InsertionSpec& spec) {
    if (!std::isfinite(spec.rho_y) || !std::isfinite(spec.rho_z)) {
        raise(Errc::degenerate_ordinates,
              "flat ordinates across the split interval leave rho_y or rho_z undefined");
    }
    const ChfifSystem inserted = insert(sys, spec);
    const SplitOverrides split = resolve_split_parameters(sys, spec);
    const int k = spec.k;
    const auto& d = sys.data();
    const double ry = spec.rho_y;
    const double rz = spec.rho_z;

    double worst = 0.0;
    constexpr int kGridPoints = 101;
    for (int i = 0; i < kGridPoints; ++i) {
        const double x = sys.x0() + sys.span() * static_cast<double>(i) / (kGridPoints - 1);
        const double line_y = endpoint_line(sys, d.y(0), d.y(sys.map_count()), x);
        const double line_z = endpoint_line(sys, d.z(0), d.z(sys.map_count()), x);
        const double pk = sys.p_at(k, x);
        const double qk = sys.q_at(k, x);

        // The beta carrier terms scale with rho_y, like every other term of the
        // p relations; that is what makes the relation an identity against the
        // join-up solution at both endpoints.
        const double ql_ref = rz * qk + (1.0 - rz) * d.z(k - 1) +
                              (rz * sys.gamma(k) - split.gamma_l) * line_z;
        const double qr_ref = (1.0 - rz) * qk + rz * d.z(k) +
                              ((1.0 - rz) * sys.gamma(k) - split.gamma_r) * line_z;
        const double pl_ref = ry * pk + (1.0 - ry) * d.y(k - 1) +
                              (ry * sys.alpha(k) - split.alpha_l) * line_y +
                              (ry * sys.beta(k) - split.beta_l) * line_z;
        const double pr_ref = (1.0 - ry) * pk + ry * d.y(k) +
                              ((1.0 - ry) * sys.alpha(k) - split.alpha_r) * line_y +
                              ((1.0 - ry) * sys.beta(k) - split.beta_r) * line_z;

        worst = std::max(worst, std::abs(inserted.q_at(k, x) - ql_ref));
        worst = std::max(worst, std::abs(inserted.q_at(k + 1, x) - qr_ref));
        worst = std::max(worst, std::abs(inserted.p_at(k, x) - pl_ref));
        worst = std::max(worst, std::abs(inserted.p_at(k + 1, x) - pr_ref));
    }
    return worst;
}

}  // namespace chfif

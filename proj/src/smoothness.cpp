#include "chfif/smoothness.hpp"

#include <algorithm>
#include <cmath>

#include "chfif/insertion.hpp"

namespace chfif {

using detail::format_double;

namespace {

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

void check_exponents(const std::vector<double>& e, const char* name) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!(e[i] > 0.0 && e[i] <= 1.0)) {
            raise(Errc::parameter_constraint_violation,
                  std::string(name) + "[" + std::to_string(i + 1) + "] = " + format_double(e[i]) +
                      " outside (0, 1]");
        }
    }
}

bool near_one(double v) { return std::abs(v - 1.0) <= kIndexUnitTolerance; }

}  // namespace

LipschitzData LipschitzData::affine(int map_count) {
    LipschitzData lip;
    lip.lambda_n.assign(static_cast<std::size_t>(map_count), 1.0);
    lip.mu_n.assign(static_cast<std::size_t>(map_count), 1.0);
    lip.lambda = lip.mu = lip.delta = 1.0;
    return lip;
}

LipschitzData LipschitzData::user(std::vector<double> lambda_n, std::vector<double> mu_n) {
    if (lambda_n.empty() || lambda_n.size() != mu_n.size()) {
        raise(Errc::length_mismatch, "lambda and mu exponent lists must match and be non-empty");
    }
    check_exponents(lambda_n, "lambda");
    check_exponents(mu_n, "mu");
    LipschitzData lip;
    lip.lambda_n = std::move(lambda_n);
    lip.mu_n = std::move(mu_n);
    lip.lambda = min_of(lip.lambda_n);
    lip.mu = min_of(lip.mu_n);
    lip.delta = std::min(lip.lambda, lip.mu);
    return lip;
}

LipschitzData LipschitzData::with_split(int k) const {
    LipschitzData out = *this;
    const auto at = static_cast<std::ptrdiff_t>(k - 1);
    out.lambda_n.insert(out.lambda_n.begin() + at, lambda_n[static_cast<std::size_t>(at)]);
    out.mu_n.insert(out.mu_n.begin() + at, mu_n[static_cast<std::size_t>(at)]);
    return out;
}

LipschitzData lipschitz_of_affine(const ChfifSystem& sys) {
    return LipschitzData::affine(sys.map_count());
}

SmoothnessIndices compute_indices(const ChfifSystem& sys, const LipschitzData& lip) {
    const int n_maps = sys.map_count();
    if (static_cast<int>(lip.lambda_n.size()) != n_maps) {
        raise(Errc::length_mismatch, "Lipschitz data covers " +
                                         std::to_string(lip.lambda_n.size()) + " maps, system has " +
                                         std::to_string(n_maps));
    }
    SmoothnessIndices idx;
    idx.omega.reserve(n_maps);
    idx.gamma_idx.reserve(n_maps);
    idx.theta.reserve(n_maps);
    idx.normalized_lengths.reserve(n_maps);
    for (int n = 1; n <= n_maps; ++n) {
        const double len = (sys.data().x(n) - sys.data().x(n - 1)) / sys.span();
        idx.normalized_lengths.push_back(len);
        idx.omega.push_back(std::abs(sys.alpha(n)) / std::pow(len, lip.lambda));
        idx.gamma_idx.push_back(std::abs(sys.gamma(n)) / std::pow(len, lip.mu));
        idx.theta.push_back(std::abs(sys.alpha(n)) / std::pow(len, lip.mu));
    }
    idx.Omega = *std::max_element(idx.omega.begin(), idx.omega.end());
    idx.Gamma = *std::max_element(idx.gamma_idx.begin(), idx.gamma_idx.end());
    idx.Theta = *std::max_element(idx.theta.begin(), idx.theta.end());
    return idx;
}

Category categorize(double value, double tol) {
    if (std::abs(value - 1.0) <= tol) return Category::equal_one;
    return value < 1.0 ? Category::below_one : Category::above_one;
}

const char* to_string(Category c) {
    switch (c) {
        case Category::below_one: return "below-one";
        case Category::equal_one: return "equal-one";
        case Category::above_one: return "above-one";
    }
    return "unknown";
}

const char* to_string(SmoothnessClassKind c) {
    switch (c) {
        case SmoothnessClassKind::lip_delta: return "lip-delta";
        case SmoothnessClassKind::log_modulus: return "log-modulus";
        case SmoothnessClassKind::log_modulus_theta_one: return "log-modulus-theta-one";
        case SmoothnessClassKind::log_squared_modulus: return "log-squared-modulus";
    }
    return "unknown";
}

SmoothnessClass classify_smoothness(const SmoothnessIndices& idx, const LipschitzData& lip) {
    const bool theta_one = near_one(idx.Theta);
    const bool omega_one = near_one(idx.Omega);
    const bool gamma_one = near_one(idx.Gamma);

    SmoothnessClass cls;
    cls.delta = lip.delta;
    if (!theta_one) {
        cls.kind = (omega_one || gamma_one) ? SmoothnessClassKind::log_modulus
                                            : SmoothnessClassKind::lip_delta;
    } else {
        cls.kind = gamma_one ? SmoothnessClassKind::log_squared_modulus
                             : SmoothnessClassKind::log_modulus_theta_one;
    }
    return cls;
}

namespace {

// One index family (values over maps, exponent e in (0,1]). Mirrors the
// three-way case split on where the pre-insertion max sits relative to 1 and
// to the threshold 1 / max(|rho|^{1-e}, |1-rho|^{1-e}).
IndexPrediction predict_family(const std::vector<double>& v, int k, double rho, double expo) {
    const double tol = kIndexUnitTolerance;
    const std::size_t ki = static_cast<std::size_t>(k - 1);
    const double X = *std::max_element(v.begin(), v.end());
    const double factor_l = std::pow(rho, 1.0 - expo);
    const double factor_r = std::pow(1.0 - rho, 1.0 - expo);
    const double max_factor = std::max(factor_l, factor_r);

    IndexPrediction pr;
    pr.threshold = 1.0 / max_factor;

    if (std::abs(expo - 1.0) <= tol) {
        // exponent 1 leaves every split entry unchanged
        pr.category = categorize(X, tol);
        pr.note = "exponent one, post max equals pre max";
        return pr;
    }

    bool max_off_k = false;
    bool any_off_k_above = false;
    bool any_off_k_at_one = false;
    for (std::size_t n = 0; n < v.size(); ++n) {
        if (n == ki) continue;
        if (std::abs(v[n] - X) <= tol) max_off_k = true;
        if (v[n] > 1.0 + tol) any_off_k_above = true;
        if (near_one(v[n])) any_off_k_at_one = true;
    }

    if (X < 1.0 - tol) {
        pr.category = Category::below_one;
        pr.note = "pre max below one";
        return pr;
    }
    if (max_off_k) {
        // the maximal entry survives insertion untouched
        pr.category = categorize(X, tol);
        pr.note = "pre max attained off the split interval";
        return pr;
    }
    // max attained only at k
    if (any_off_k_above) {
        pr.note = "an off-split entry exceeds one without attaining the max; not covered";
        return pr;
    }
    const double scaled = max_factor * v[ki];
    if (near_one(X)) {
        pr.category = categorize(scaled, tol);
        pr.note = "pre max of one at the split interval scales below one";
        return pr;
    }
    if (scaled > 1.0 + tol) {
        pr.category = Category::above_one;
        pr.note = "split entry stays above one";
    } else if (near_one(scaled)) {
        pr.category = Category::equal_one;
        pr.note = "split entry lands exactly at one";
    } else if (any_off_k_at_one) {
        pr.category = Category::equal_one;
        pr.note = "an off-split entry sits at one";
    } else {
        pr.category = Category::below_one;
        pr.note = "split entry drops below one";
    }
    return pr;
}

}  // namespace

HatPrediction predict_hat_category(const SmoothnessIndices& pre, int k, double rho_x,
                                   const LipschitzData& lip) {
    if (k < 1 || static_cast<std::size_t>(k) > pre.omega.size()) {
        raise(Errc::index_out_of_range, "split index " + std::to_string(k));
    }
    if (!(rho_x > 0.0 && rho_x < 1.0)) {
        raise(Errc::hypothesis_not_met, "rho_x = " + format_double(rho_x) + " outside (0, 1)");
    }
    HatPrediction out;
    out.omega = predict_family(pre.omega, k, rho_x, lip.lambda);
    out.gamma = predict_family(pre.gamma_idx, k, rho_x, lip.mu);
    out.theta = predict_family(pre.theta, k, rho_x, lip.mu);
    return out;
}

HatPrediction predict_hat_category(const ChfifSystem& sys, const InsertionSpec& spec,
                                   const LipschitzData& lip) {
    if (spec.overrides) {
        raise(Errc::hypothesis_not_met,
              "category prediction assumes the proportional split parameters");
    }
    return predict_hat_category(compute_indices(sys, lip), spec.k, spec.rho_x, lip);
}

const char* to_string(SmoothnessComparison c) {
    switch (c) {
        case SmoothnessComparison::same_lipschitz_class: return "same-lipschitz-class";
        case SmoothnessComparison::same_log_modulus: return "same-log-modulus";
        case SmoothnessComparison::post_strictly_smoother: return "post-strictly-smoother";
    }
    return "unknown";
}

SmoothnessComparison compare_smoothness(const SmoothnessIndices& pre,
                                        const SmoothnessClass& pre_cls,
                                        const SmoothnessIndices& post,
                                        const SmoothnessClass& post_cls) {
    const double tol = kIndexUnitTolerance;
    if (pre.Omega > 1.0 + tol || pre.Gamma > 1.0 + tol || pre.Theta > 1.0 + tol) {
        raise(Errc::hypothesis_not_met,
              "pre-insertion indices must all be <= 1 (Omega = " + format_double(pre.Omega) +
                  ", Gamma = " + format_double(pre.Gamma) + ", Theta = " +
                  format_double(pre.Theta) + ")");
    }
    const bool pre_all_below =
        pre.Omega < 1.0 - tol && pre.Gamma < 1.0 - tol && pre.Theta < 1.0 - tol;
    if (pre_all_below) {
        if (post_cls.kind != SmoothnessClassKind::lip_delta) {
            raise(Errc::hypothesis_not_met, "post indices inconsistent with pre maxima below one");
        }
        return SmoothnessComparison::same_lipschitz_class;
    }
    if (post_cls.kind == SmoothnessClassKind::lip_delta) {
        return SmoothnessComparison::post_strictly_smoother;
    }
    if (post_cls.kind == pre_cls.kind) {
        return SmoothnessComparison::same_log_modulus;
    }
    raise(Errc::hypothesis_not_met,
          std::string("pre class ") + to_string(pre_cls.kind) + " against post class " +
              to_string(post_cls.kind) + " matches none of the three outcomes");
}

DimensionBounds dimension_bounds(const ChfifSystem& sys, const SmoothnessIndices& idx,
                                 const LipschitzData& lip, BoundVariant variant) {
    const double i_max =
        *std::max_element(idx.normalized_lengths.begin(), idx.normalized_lengths.end());
    if (near_one(i_max)) {
        raise(Errc::degenerate_logarithm, "|I_max| = 1: a single subinterval has no log scale");
    }
    double sum = 0.0;
    if (variant == BoundVariant::alpha_sum) {
        for (double a : sys.params().alpha) sum += std::abs(a);
    } else {
        for (double g : sys.params().gamma) sum += std::abs(g);
    }

    DimensionBounds out;
    out.variant = variant;
    out.lower = 1.0 - std::log(sum) / std::log(i_max);
    out.upper = 1.0 - lip.delta - std::log(static_cast<double>(sys.map_count())) / std::log(i_max);
    if (variant == BoundVariant::alpha_sum) {
        if (near_one(idx.Theta)) {
            out.applicable = true;
            out.reason = "Theta = 1";
        } else if (near_one(idx.Omega)) {
            out.applicable = true;
            out.reason = "Omega = 1";
        } else {
            out.reason = "neither Theta nor Omega is 1";
        }
    } else {
        if (near_one(idx.Gamma)) {
            out.applicable = true;
            out.reason = "Gamma = 1";
        } else {
            out.reason = "Gamma is not 1";
        }
    }
    return out;
}

DimensionBounds dimension_bounds(const ChfifSystem& sys, const SmoothnessIndices& idx,
                                 const LipschitzData& lip) {
    if (near_one(idx.Theta) || near_one(idx.Omega)) {
        return dimension_bounds(sys, idx, lip, BoundVariant::alpha_sum);
    }
    if (near_one(idx.Gamma)) {
        return dimension_bounds(sys, idx, lip, BoundVariant::gamma_sum);
    }
    return dimension_bounds(sys, idx, lip, BoundVariant::alpha_sum);
}

std::vector<DimensionBounds> dimension_bounds_all(const ChfifSystem& sys,
                                                  const SmoothnessIndices& idx,
                                                  const LipschitzData& lip) {
    std::vector<DimensionBounds> out;
    const DimensionBounds alpha = dimension_bounds(sys, idx, lip, BoundVariant::alpha_sum);
    const DimensionBounds gamma = dimension_bounds(sys, idx, lip, BoundVariant::gamma_sum);
    if (alpha.applicable) out.push_back(alpha);
    if (gamma.applicable) out.push_back(gamma);
    if (out.empty()) out.push_back(alpha);
    return out;
}

BoundsComparison compare_bounds(const DimensionBounds& pre, const DimensionBounds& post) {
    if (!pre.applicable || !post.applicable) {
        raise(Errc::hypothesis_not_met, "dimension bounds are only comparable when both apply");
    }
    BoundsComparison out;
    out.upper_margin = pre.upper - post.upper;
    out.lower_margin = post.lower - pre.lower;
    out.upper_shrank = out.upper_margin >= 0.0;
    out.lower_grew = out.lower_margin >= 0.0;
    return out;
}

}  // namespace chfif

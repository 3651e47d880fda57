#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chfif/model.hpp"

// Smoothness machinery: Lipschitz exponents of the p/q functions, the indices
// Omega_n = |alpha_n| / |I_n|^lambda, Gamma_n = |gamma_n| / |I_n|^mu and
// Theta_n = |alpha_n| / |I_n|^mu over domain-normalized interval lengths, the
// four-way smoothness classification they induce, and the fractal-dimension
// bounds. Equality-to-one comparisons use absolute tolerance 1e-12.

namespace chfif {

inline constexpr double kIndexUnitTolerance = 1e-12;

struct LipschitzData {
    std::vector<double> lambda_n;  // exponents of p_n
    std::vector<double> mu_n;      // exponents of q_n
    double lambda = 1.0;           // min over lambda_n
    double mu = 1.0;               // min over mu_n
    double delta = 1.0;            // min(lambda, mu)

    static LipschitzData affine(int map_count);
    /// User-supplied exponents; each must lie in (0, 1].
    static LipschitzData user(std::vector<double> lambda_n, std::vector<double> mu_n);

    /// Exponents for the inserted system: the split entries inherit the
    /// exponents of the split map.
    LipschitzData with_split(int k) const;
};

/// Affine p, q are Lipschitz of order 1.
LipschitzData lipschitz_of_affine(const ChfifSystem& sys);

struct SmoothnessIndices {
    std::vector<double> omega;
    std::vector<double> gamma_idx;
    std::vector<double> theta;
    std::vector<double> normalized_lengths;
    double Omega = 0.0;
    double Gamma = 0.0;
    double Theta = 0.0;
};

SmoothnessIndices compute_indices(const ChfifSystem& sys, const LipschitzData& lip);

enum class Category { below_one, equal_one, above_one };

Category categorize(double value, double tol = kIndexUnitTolerance);
const char* to_string(Category c);

enum class SmoothnessClassKind {
    lip_delta,              // Theta != 1, Omega != 1, Gamma != 1
    log_modulus,            // Theta != 1, Omega = 1 or Gamma = 1
    log_modulus_theta_one,  // Theta = 1, Gamma != 1
    log_squared_modulus,    // Theta = 1, Gamma = 1
};

struct SmoothnessClass {
    SmoothnessClassKind kind = SmoothnessClassKind::lip_delta;
    double delta = 1.0;
};

const char* to_string(SmoothnessClassKind c);

SmoothnessClass classify_smoothness(const SmoothnessIndices& idx, const LipschitzData& lip);

/// Predicted category of one post-insertion index, with the threshold
/// 1 / max(|rho_x|^{1-e}, |1-rho_x|^{1-e}) that separates the cases.
/// `category` is empty when the pre-insertion configuration is outside the
/// cases the prediction covers; `note` then says why.
struct IndexPrediction {
    std::optional<Category> category;
    double threshold = 1.0;
    std::string note;
};

struct HatPrediction {
    IndexPrediction omega;
    IndexPrediction gamma;
    IndexPrediction theta;

    bool fully_covered() const {
        return omega.category && gamma.category && theta.category;
    }
};

/// Predicts the post-insertion categories from the pre-insertion indices under
/// the proportional split defaults. k is the 1-based split interval.
HatPrediction predict_hat_category(const SmoothnessIndices& pre, int k, double rho_x,
                                   const LipschitzData& lip);

/// Same, but refuses overridden split parameters.
HatPrediction predict_hat_category(const ChfifSystem& sys, const struct InsertionSpec& spec,
                                   const LipschitzData& lip);

enum class SmoothnessComparison {
    same_lipschitz_class,
    same_log_modulus,
    post_strictly_smoother,
};

const char* to_string(SmoothnessComparison c);

/// Which of the three insertion outcomes holds, from the pre and post indices
/// and classes. Requires all pre indices <= 1; throws hypothesis_not_met
/// otherwise or when the pattern matches none of the three outcomes.
SmoothnessComparison compare_smoothness(const SmoothnessIndices& pre,
                                        const SmoothnessClass& pre_cls,
                                        const SmoothnessIndices& post,
                                        const SmoothnessClass& post_cls);

enum class BoundVariant { alpha_sum, gamma_sum };

struct DimensionBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool applicable = false;
    BoundVariant variant = BoundVariant::alpha_sum;
    std::string reason;  // which of Theta = 1, Omega = 1, Gamma = 1 triggered
};

/// lower = 1 - log(sum |alpha_i|) / log |I_max| (gamma variant: sum |gamma_i|),
/// upper = 1 - delta - log(map count) / log |I_max|, lengths normalized.
/// Throws degenerate_logarithm when |I_max| = 1 (single subinterval).
DimensionBounds dimension_bounds(const ChfifSystem& sys, const SmoothnessIndices& idx,
                                 const LipschitzData& lip, BoundVariant variant);

/// Variant picked by applicability (alpha preferred); inapplicable bounds are
/// still computed and flagged.
DimensionBounds dimension_bounds(const ChfifSystem& sys, const SmoothnessIndices& idx,
                                 const LipschitzData& lip);

/// Every applicable variant; both when Theta/Omega and Gamma all sit at 1.
std::vector<DimensionBounds> dimension_bounds_all(const ChfifSystem& sys,
                                                  const SmoothnessIndices& idx,
                                                  const LipschitzData& lip);

struct BoundsComparison {
    bool upper_shrank = false;  // post.upper <= pre.upper
    bool lower_grew = false;    // post.lower >= pre.lower
    double upper_margin = 0.0;  // pre.upper - post.upper
    double lower_margin = 0.0;  // post.lower - pre.lower
};

/// Requires both bounds applicable; throws hypothesis_not_met otherwise.
BoundsComparison compare_bounds(const DimensionBounds& pre, const DimensionBounds& post);

}  // namespace chfif

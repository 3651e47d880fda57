#pragma once

#include <optional>
#include <string>

#include "chfif/evaluate.hpp"
#include "chfif/model.hpp"

// Node insertion: adding a point (x^, y^, z^) inside subinterval I_k replaces
// map k by a left/right pair over [x_{k-1}, x^] and [x^, x_k], giving an
// N+1-map system over the N+2-point data.

namespace chfif {

/// Explicit split parameters. When absent, the proportional choice is used:
/// alpha_l = rho_x * alpha_k, alpha_r = (1 - rho_x) * alpha_k, likewise for
/// beta and gamma.
struct SplitOverrides {
    double alpha_l = 0.0, alpha_r = 0.0;
    double beta_l = 0.0, beta_r = 0.0;
    double gamma_l = 0.0, gamma_r = 0.0;
};

struct InsertionSpec {
    double x_hat = 0.0, y_hat = 0.0, z_hat = 0.0;
    int k = 0;  // 1-based enclosing subinterval
    double rho_x = 0.0;
    double rho_y = 0.0;  // NaN when y_k == y_{k-1}
    double rho_z = 0.0;  // NaN when z_k == z_{k-1}
    std::optional<SplitOverrides> overrides;
};

/// Locates the enclosing interval, computes the split ratios and validates
/// overrides. Throws abscissa_collision when x_hat lands on an existing node.
InsertionSpec make_insertion_spec(const ChfifSystem& sys, double x_hat, double y_hat,
                                  double z_hat,
                                  std::optional<SplitOverrides> overrides = std::nullopt);

/// The six split parameters actually used (overrides or proportional default).
SplitOverrides resolve_split_parameters(const ChfifSystem& sys, const InsertionSpec& spec);

/// Builds the inserted system. Maps away from k are unchanged; the split pair
/// interpolates (y_{k-1}, z_{k-1}) -> (y^, z^) and (y^, z^) -> (y_k, z_k).
ChfifSystem insert(const ChfifSystem& sys, const InsertionSpec& spec);

enum class InsertionKind { node_node, node_knot, knot_node, knot_knot };

const char* to_string(InsertionKind kind);

struct InsertionClassification {
    InsertionKind kind = InsertionKind::node_node;
    double tolerance_used = 0.0;
    double f1_at_x = 0.0;   // attractor values at x_hat used for the comparison
    double f2_at_x = 0.0;
    double eval_error_bound = 0.0;
};

/// Compares (y^, z^) against the attractor at x^; the evaluation depth is
/// raised until the certified error bound drops below tol/10.
InsertionClassification classify_insertion(const ChfifSystem& sys, double x_hat, double y_hat,
                                           double z_hat, double tol = 1e-6);

/// Max residual over a 100-point grid of the split-map identities
/// L_k^l = rho_x L_k + (1-rho_x) x_{k-1} and L_k^r = (1-rho_x) L_k + rho_x x_k.
double split_L_identity_check(const ChfifSystem& sys, const InsertionSpec& spec);

/// Max residual of the closed-form expressions for the split p/q functions in
/// terms of p_k, q_k and the ordinate ratios, against the join-up-solved split
/// functions. Throws degenerate_ordinates when a ratio is undefined.
double split_pq_relation_check(const ChfifSystem& sys, const InsertionSpec& spec);

}  // namespace chfif

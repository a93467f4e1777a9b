#pragma once

// Numerical thresholds shared across modules.

namespace shadowgauge::tol {

/// Unit-norm slack for Direction.
inline constexpr double unit_norm = 1e-12;

/// Two unit normals are the same direction when their dot exceeds 1 - this.
inline constexpr double direction_merge = 1e-10;

/// Facet volumes at or below this are numerically degenerate and dropped.
inline constexpr double facet_volume = 1e-12;

/// Minkowski balance: |sum a_i u_i| <= balance * sum a_i.
inline constexpr double balance = 1e-9;

/// FacetBody offsets must match vertex support to this relative error.
inline constexpr double offset_consistency = 1e-9;

/// Relative singular-value floor used for rank decisions.
inline constexpr double rank = 1e-12;

/// Slack in halfspace membership.
inline constexpr double membership = 1e-12;

/// Relative tolerance policy for verification.
inline constexpr double exact_path = 1e-9;
inline constexpr double closed_form = 1e-12;
inline constexpr double monte_carlo_sigmas = 3.0;

/// Verdict tolerances for inequality checks.
inline constexpr double check_closed_form = 1e-7;
inline constexpr double check_heuristic = 1e-5;

} // namespace shadowgauge::tol

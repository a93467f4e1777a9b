#pragma once

#include <optional>
#include <string>

#include "shadowgauge/bodies.hpp"
#include "shadowgauge/constants.hpp"
#include "shadowgauge/shadows.hpp"

namespace shadowgauge {

enum class CheckName {
    separation,
    volume_difference,
    hyperplane,
    surface_hyperplane,
    ball_equality,
    oracle_volume,
    oracle_surface_area,
};

enum class Verdict { passed, failed, not_applicable };

const char* to_string(CheckName name) noexcept;
const char* to_string(Verdict v) noexcept;

struct CheckTolerances {
    double tol_rel = 0.0;
    std::int64_t coarse_samples = 0; // 0 when no sphere search was needed
    int restarts = 0;
    double shrink_tol = 0.0;
    bool refined = false; // the automatic 8x re-run was used
};

/// Outcome of one inequality verification, with the convention that the
/// inequality reads lhs >= rhs and gap = lhs - rhs.
struct CheckReport {
    CheckName name = CheckName::separation;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    std::optional<double> epsilon_star;
    std::optional<Direction> witness_xi;
    bool passed = false;
    Verdict verdict = Verdict::failed;
    CheckTolerances tolerances;
    std::string note;
};

struct CheckOptions {
    SphereSearchConfig search;
    double tol_closed_form = 1e-7;
    double tol_heuristic = 1e-5;
    /// Re-run a failing check once with 8x coarse samples before reporting.
    bool auto_refine = true;
};

/// gap >= -tol * max(|lhs|, |rhs|).
bool within_tolerance(double lhs, double rhs, double tol_rel);

/// eps* = min over the sphere of |L|xi^perp| - |K|xi^perp|.
SphereMinResult shadow_margin(const Body& k, const Zonotope& l, const SphereSearchConfig& cfg);

/// Shadow domination by eps* implies |K|^{(n-1)/n} <= |L|^{(n-1)/n} - c_n eps*.
/// Reported as lhs = |L|^{(n-1)/n} - c_n eps*, rhs = |K|^{(n-1)/n}.
/// eps* <= 0 yields Verdict::not_applicable.
CheckReport separation_check(const Body& k, const Zonotope& l, const CheckOptions& opts = {});

/// |L|^{(n-1)/n} - |K|^{(n-1)/n} >= c_n eps*.
CheckReport volume_difference_check(const Body& k, const Zonotope& l, const CheckOptions& opts = {});

/// |L|^{(n-1)/n} >= c_n min_xi |L|xi^perp| for a zonotope or ball L.
CheckReport hyperplane_check(const Body& l, const CheckOptions& opts = {});

/// S(L) >= n/(n-1) c_n min_xi S(L|xi^perp) |L|^{1/n} for a zonotope or
/// ball L in dimension n >= 3.
CheckReport surface_hyperplane_check(const Body& l, const CheckOptions& opts = {});

/// Relative gap |lhs - rhs| / lhs of the surface inequality for the unit
/// ball in closed form. n >= 3.
double ball_equality_gap(int n);

/// ball_equality_gap packaged as a report (passes when <= 1e-12).
CheckReport ball_equality_check(int n);

} // namespace shadowgauge

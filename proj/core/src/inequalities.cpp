#include "shadowgauge/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shadowgauge/calculus.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/tolerances.hpp"

namespace shadowgauge {

const char* to_string(CheckName name) noexcept
{
    switch (name) {
    case CheckName::separation: return "separation";
    case CheckName::volume_difference: return "volume_difference";
    case CheckName::hyperplane: return "hyperplane";
    case CheckName::surface_hyperplane: return "surface_hyperplane";
    case CheckName::ball_equality: return "ball_equality";
    case CheckName::oracle_volume: return "oracle_volume";
    case CheckName::oracle_surface_area: return "oracle_surface_area";
    }
    return "unknown";
}

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::passed: return "passed";
    case Verdict::failed: return "failed";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "unknown";
}

bool within_tolerance(double lhs, double rhs, double tol_rel)
{
    return lhs - rhs >= -tol_rel * std::max(std::abs(lhs), std::abs(rhs));
}

namespace {

void finish(CheckReport& r, double tol_rel)
{
    r.gap = r.lhs - r.rhs;
    r.tolerances.tol_rel = tol_rel;
    r.passed = within_tolerance(r.lhs, r.rhs, tol_rel);
    r.verdict = r.passed ? Verdict::passed : Verdict::failed;
}

void record_search(CheckReport& r, const SphereSearchConfig& cfg, int n, bool refined)
{
    r.tolerances.coarse_samples = cfg.coarse_samples > 0 ? cfg.coarse_samples : default_coarse_samples(n);
    r.tolerances.restarts = cfg.restarts;
    r.tolerances.shrink_tol = cfg.shrink_tol;
    r.tolerances.refined = refined;
}

SphereSearchConfig refined_config(const SphereSearchConfig& cfg, int n)
{
    SphereSearchConfig finer = cfg;
    finer.coarse_samples = 8 * (cfg.coarse_samples > 0 ? cfg.coarse_samples : default_coarse_samples(n));
    return finer;
}

// Runs `attempt` once and, if it reports a failure and refinement is
// enabled, once more with 8x coarse samples.
template <typename Attempt>
CheckReport with_refinement(const CheckOptions& opts, int n, Attempt&& attempt)
{
    CheckReport r = attempt(opts.search, false);
    if (r.verdict == Verdict::failed && opts.auto_refine)
        r = attempt(refined_config(opts.search, n), true);
    return r;
}

double power_volume(double v, int n)
{
    return std::pow(v, (n - 1.0) / n);
}

void require_same_dim(const Body& k, const Zonotope& l)
{
    if (k.dim() != l.dim())
        throw Error(Errc::dimension_mismatch,
                    "bodies differ in dimension (" + std::to_string(k.dim()) + " vs " +
                        std::to_string(l.dim()) + ")");
}

bool margin_positive(const SphereMinResult& m, const ShadowFunction& shadow_l)
{
    return m.value > tol::closed_form * shadow_l(m.argmin);
}

template <typename Fill>
CheckReport shadow_pair_check(CheckName name, const Body& k, const Zonotope& l, const CheckOptions& opts,
                              Fill&& fill)
{
    require_same_dim(k, l);
    l.require_full_rank(to_string(name));
    const int n = l.dim();
    const double vol_k = volume(k).value;
    const double vol_l = volume(Body(l)).value;
    const ShadowFunction shadow_l{Body(l)};
    const ShadowFunction shadow_k{k};
    const double c = cn(n);

    return with_refinement(opts, n, [&](const SphereSearchConfig& cfg, bool refined) {
        const auto margin = min_over_sphere(
            [&](const Direction& xi) { return shadow_l(xi) - shadow_k(xi); }, n, cfg);
        CheckReport r;
        r.name = name;
        r.epsilon_star = margin.value;
        r.witness_xi = margin.argmin;
        record_search(r, cfg, n, refined);
        fill(r, power_volume(vol_l, n), power_volume(vol_k, n), c * margin.value);
        finish(r, opts.tol_heuristic);
        if (!margin_positive(margin, shadow_l)) {
            r.passed = false;
            r.verdict = Verdict::not_applicable;
            r.note = "shadow margin eps* <= 0: hypothesis unmet";
        }
        return r;
    });
}

} // namespace

SphereMinResult shadow_margin(const Body& k, const Zonotope& l, const SphereSearchConfig& cfg)
{
    require_same_dim(k, l);
    const ShadowFunction shadow_l{Body(l)};
    const ShadowFunction shadow_k{k};
    return min_over_sphere([&](const Direction& xi) { return shadow_l(xi) - shadow_k(xi); }, l.dim(),
                           cfg);
}

CheckReport separation_check(const Body& k, const Zonotope& l, const CheckOptions& opts)
{
    return shadow_pair_check(CheckName::separation, k, l, opts,
                             [](CheckReport& r, double pl, double pk, double c_eps) {
                                 r.lhs = pl - c_eps;
                                 r.rhs = pk;
                             });
}

CheckReport volume_difference_check(const Body& k, const Zonotope& l, const CheckOptions& opts)
{
    return shadow_pair_check(CheckName::volume_difference, k, l, opts,
                             [](CheckReport& r, double pl, double pk, double c_eps) {
                                 r.lhs = pl - pk;
                                 r.rhs = c_eps;
                             });
}

CheckReport hyperplane_check(const Body& l, const CheckOptions& opts)
{
    const int n = l.dim();
    if (n < 2)
        throw Error(Errc::invalid_argument, "hyperplane_check needs n >= 2");
    const double c = cn(n);
    if (l.is<Ball>()) {
        const auto& b = l.as<Ball>();
        CheckReport r;
        r.name = CheckName::hyperplane;
        r.lhs = power_volume(volume(l).value, n);
        r.rhs = c * std::pow(b.radius, n - 1) * unit_ball_volume(n - 1);
        r.witness_xi = Direction::axis(n, n - 1);
        finish(r, opts.tol_closed_form);
        return r;
    }
    if (!l.is<Zonotope>())
        throw Error(Errc::invalid_argument, "hyperplane_check: L must be a zonotope or a ball");
    l.as<Zonotope>().require_full_rank("hyperplane_check");

    const double lhs = power_volume(volume(l).value, n);
    const ShadowFunction shadow(l);
    return with_refinement(opts, n, [&](const SphereSearchConfig& cfg, bool refined) {
        const auto m = min_over_sphere(std::cref(shadow), n, cfg);
        CheckReport r;
        r.name = CheckName::hyperplane;
        r.lhs = lhs;
        r.rhs = c * m.value;
        r.witness_xi = m.argmin;
        record_search(r, cfg, n, refined);
        finish(r, opts.tol_heuristic);
        return r;
    });
}

CheckReport surface_hyperplane_check(const Body& l, const CheckOptions& opts)
{
    const int n = l.dim();
    if (n < 3)
        throw Error(Errc::invalid_argument, "surface_hyperplane_check needs n >= 3");
    const double c = cn(n);
    const double factor = static_cast<double>(n) / (n - 1);
    const double vol_root = std::pow(volume(l).value, 1.0 / n);

    if (l.is<Ball>()) {
        const auto& b = l.as<Ball>();
        CheckReport r;
        r.name = CheckName::surface_hyperplane;
        r.lhs = surface_area(l);
        const double shadow_surface = (n - 1) * unit_ball_volume(n - 1) * std::pow(b.radius, n - 2);
        r.rhs = factor * c * shadow_surface * vol_root;
        r.witness_xi = Direction::axis(n, n - 1);
        finish(r, opts.tol_closed_form);
        return r;
    }
    if (!l.is<Zonotope>())
        throw Error(Errc::invalid_argument, "surface_hyperplane_check: L must be a zonotope or a ball");
    const auto& z = l.as<Zonotope>();
    z.require_full_rank("surface_hyperplane_check");

    const double lhs = surface_area(l);
    return with_refinement(opts, n, [&](const SphereSearchConfig& cfg, bool refined) {
        const auto m = min_over_sphere(
            [&](const Direction& xi) { return projection_surface_area(z, xi); }, n, cfg);
        CheckReport r;
        r.name = CheckName::surface_hyperplane;
        r.lhs = lhs;
        r.rhs = factor * c * m.value * vol_root;
        r.witness_xi = m.argmin;
        record_search(r, cfg, n, refined);
        finish(r, opts.tol_heuristic);
        return r;
    });
}

double ball_equality_gap(int n)
{
    if (n < 3)
        throw Error(Errc::invalid_argument, "ball_equality_gap needs n >= 3");
    const double bn = unit_ball_volume(n);
    const double bn1 = unit_ball_volume(n - 1);
    const double lhs = n * bn;
    const double rhs = static_cast<double>(n) / (n - 1) * cn(n) * ((n - 1) * bn1) * std::pow(bn, 1.0 / n);
    return std::abs(lhs - rhs) / lhs;
}

CheckReport ball_equality_check(int n)
{
    if (n < 3)
        throw Error(Errc::invalid_argument, "ball_equality_check needs n >= 3");
    const Body ball = Ball(n, 1.0);
    CheckReport r = surface_hyperplane_check(ball);
    r.name = CheckName::ball_equality;
    r.tolerances.tol_rel = tol::closed_form;
    r.passed = ball_equality_gap(n) <= tol::closed_form;
    r.verdict = r.passed ? Verdict::passed : Verdict::failed;
    return r;
}

} // namespace shadowgauge

#include "shadowgauge/calculus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "facet_normals.hpp"
#include "shadowgauge/constants.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/numeric.hpp"
#include "shadowgauge/random.hpp"
#include "shadowgauge/shadows.hpp"
#include "shadowgauge/tolerances.hpp"

namespace shadowgauge {

const char* to_string(VolumeMethod m) noexcept
{
    switch (m) {
    case VolumeMethod::determinant: return "determinant";
    case VolumeMethod::pyramid: return "pyramid";
    case VolumeMethod::closed_form: return "closed_form";
    case VolumeMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

double zonotope_volume(const Zonotope& z)
{
    const int n = z.dim();
    const Matrix& g = z.generators();
    const auto m = static_cast<std::size_t>(g.cols());
    CompensatedSum total;
    Matrix sub(n, n);
    for_each_combination(m, static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& idx) {
        for (int c = 0; c < n; ++c)
            sub.col(c) = g.col(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
        total += std::abs(sub.determinant());
    });
    return std::ldexp(total.value(), n);
}

VolumeResult volume(const Body& body)
{
    if (body.is<Ball>()) {
        const auto& b = body.as<Ball>();
        return {std::pow(b.radius, b.dim) * unit_ball_volume(b.dim), VolumeMethod::closed_form, {}};
    }
    if (body.is<Zonotope>()) {
        const auto& z = body.as<Zonotope>();
        z.require_full_rank("volume");
        return {zonotope_volume(z), VolumeMethod::determinant, {}};
    }
    const auto& f = body.as<FacetBody>();
    CompensatedSum s;
    const auto atoms = f.measure().atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i)
        s += f.offsets()[i] * atoms[i].a;
    return {s.value() / f.dim(), VolumeMethod::pyramid, {}};
}

double volume_from_measure(const FacetMeasure& measure,
                           const std::function<double(const Direction&)>& support_at)
{
    CompensatedSum s;
    for (const auto& atom : measure.atoms())
        s += support_at(atom.u) * atom.a;
    return s.value() / measure.dim();
}

double zonotope_surface_area(const Zonotope& z)
{
    const int n = z.dim();
    if (n < 2)
        throw Error(Errc::invalid_argument, "surface area needs dimension >= 2");
    z.require_full_rank("surface_area");
    const Matrix& g = z.generators();
    const auto m = static_cast<std::size_t>(g.cols());
    CompensatedSum total;
    Matrix sub(n, n - 1);
    for_each_combination(m, static_cast<std::size_t>(n - 1), [&](const std::vector<std::size_t>& idx) {
        double norm_product = 1.0;
        for (int c = 0; c < n - 1; ++c) {
            sub.col(c) = g.col(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
            norm_product *= sub.col(c).norm();
        }
        const double gram_root = detail::cofactor_normal(sub).norm();
        if (gram_root > tol::rank * norm_product)
            total += gram_root;
    });
    // each subset contributes two antipodal facets of volume 2^{n-1} * root
    return std::ldexp(total.value(), n);
}

double surface_area(const Body& body)
{
    if (body.is<Ball>()) {
        const auto& b = body.as<Ball>();
        return b.dim * unit_ball_volume(b.dim) * std::pow(b.radius, b.dim - 1);
    }
    if (body.is<Zonotope>())
        return zonotope_surface_area(body.as<Zonotope>());
    return body.as<FacetBody>().measure().total();
}

Estimate cauchy_surface_area(const Body& body, std::int64_t n_samples, std::uint64_t seed)
{
    if (n_samples < 1000)
        throw Error(Errc::invalid_argument, "cauchy_surface_area needs at least 1000 samples");
    const int n = body.dim();
    const ShadowFunction shadow(body);
    const CounterRng rng(seed, 0x5a);

    // Welford accumulation in sample order keeps the result deterministic.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const Direction xi = Direction::normalized(rng.on_sphere(static_cast<std::uint64_t>(i), n));
        const double x = shadow(xi);
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double variance = m2 / static_cast<double>(n_samples - 1);
    const double factor = n * unit_ball_volume(n) / unit_ball_volume(n - 1);
    return {factor * mean, factor * std::sqrt(variance / static_cast<double>(n_samples))};
}

double mixed_volume_v1(const Body& k, const Body& l)
{
    if (k.dim() != l.dim())
        throw Error(Errc::dimension_mismatch, "mixed_volume_v1: bodies differ in dimension");
    if (k.is<Ball>())
        throw Error(Errc::unsupported_measure,
                    "mixed_volume_v1: first body needs a discrete surface measure");
    const FacetMeasure measure = surface_measure(k);
    return volume_from_measure(measure, [&](const Direction& u) { return support(l, u.coords()); });
}

double minkowski_first_gap(const Body& k, const Body& l)
{
    const double v1 = mixed_volume_v1(k, l);
    const int n = k.dim();
    const double vk = volume(k).value;
    const double vl = volume(l).value;
    return v1 - std::pow(vk, (n - 1.0) / n) * std::pow(vl, 1.0 / n);
}

Zonotope zonotope_sum(const Zonotope& a, const Zonotope& b)
{
    if (a.dim() != b.dim())
        throw Error(Errc::dimension_mismatch, "zonotope_sum: dimensions differ");
    Matrix g(a.dim(), a.generators().cols() + b.generators().cols());
    g << a.generators(), b.generators();
    return Zonotope(std::move(g), std::max(a.cap(), b.cap()));
}

double steiner_2d(const Zonotope& p, double eps)
{
    if (p.dim() != 2)
        throw Error(Errc::invalid_argument, "steiner_2d expects a planar zonotope");
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw Error(Errc::invalid_argument, "steiner_2d: eps must be non-negative");
    p.require_full_rank("steiner_2d");
    const double area = zonotope_volume(p);
    const double perimeter = zonotope_surface_area(p);
    return area + eps * (perimeter + std::numbers::pi * eps);
}

} // namespace shadowgauge

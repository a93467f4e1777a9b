#include "shadowgauge/shadows.hpp"

#include <algorithm>
#include <cmath>

#include "shadowgauge/calculus.hpp"
#include "shadowgauge/constants.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/numeric.hpp"
#include "shadowgauge/tolerances.hpp"

namespace shadowgauge {

Matrix orthobasis(const Direction& xi)
{
    const int n = xi.dim();
    const Vector& x = xi.coords();
    Eigen::Index k = 0;
    x.cwiseAbs().maxCoeff(&k);
    const double s = x[k] >= 0.0 ? 1.0 : -1.0;

    // H = I - 2 w w^T / |w|^2 with w = xi + s e_k maps xi to -s e_k, so
    // the columns of H other than k span xi^perp.
    Vector w = x;
    w[k] += s;
    const double ww = w.squaredNorm();

    Matrix basis(n, n - 1);
    for (int j = 0, c = 0; j < n; ++j) {
        if (j == k)
            continue;
        Vector col = Vector::Unit(n, j) - (2.0 * w[j] / ww) * w;
        basis.col(c++) = col;
    }
    return basis;
}

Zonotope project_zonotope(const Zonotope& z, const Direction& xi)
{
    if (xi.dim() != z.dim())
        throw Error(Errc::dimension_mismatch, "project_zonotope: direction dimension mismatch");
    const Matrix basis = orthobasis(xi);
    const Matrix projected = basis.transpose() * z.generators();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index j = 0; j < projected.cols(); ++j) {
        if (projected.col(j).norm() > tol::rank * z.generators().col(j).norm())
            keep.push_back(j);
    }
    Matrix g(projected.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
        g.col(static_cast<Eigen::Index>(c)) = projected.col(keep[c]);
    return Zonotope(std::move(g), z.cap());
}

ShadowFunction::ShadowFunction(const Body& body) : dim_(body.dim())
{
    if (body.is<Ball>()) {
        const auto& b = body.as<Ball>();
        is_ball_ = true;
        ball_value_ = std::pow(b.radius, b.dim - 1) * unit_ball_volume(b.dim - 1);
        return;
    }
    const FacetMeasure measure = surface_measure(body);
    gens_.resize(dim_, static_cast<Eigen::Index>(measure.pair_count()));
    for (std::size_t k = 0; k < measure.pair_count(); ++k) {
        const auto& atom = measure.pair(k);
        gens_.col(static_cast<Eigen::Index>(k)) = atom.a * atom.u.coords();
    }
}

double ShadowFunction::operator()(const Direction& xi) const
{
    if (xi.dim() != dim_)
        throw Error(Errc::dimension_mismatch, "projection_volume: direction dimension mismatch");
    if (is_ball_)
        return ball_value_;
    CompensatedSum s;
    for (Eigen::Index j = 0; j < gens_.cols(); ++j)
        s += std::abs(gens_.col(j).dot(xi.coords()));
    return s.value();
}

double projection_volume(const Body& body, const Direction& xi)
{
    if (xi.dim() != body.dim())
        throw Error(Errc::dimension_mismatch, "projection_volume: direction dimension mismatch");
    return ShadowFunction(body)(xi);
}

Body projection_body(const Body& body)
{
    if (body.is<Ball>()) {
        const auto& b = body.as<Ball>();
        return Ball(b.dim, std::pow(b.radius, b.dim - 1) * unit_ball_volume(b.dim - 1));
    }
    ShadowFunction shadow(body);
    Matrix g = shadow.projection_generators();
    const auto count = static_cast<std::size_t>(g.cols());
    return Zonotope(std::move(g), std::max(default_generator_cap, count));
}

double projection_surface_area(const Zonotope& z, const Direction& xi)
{
    if (z.dim() < 3)
        throw Error(Errc::invalid_argument,
                    "projection_surface_area needs n >= 3 (the shadow of a planar body is a segment)");
    z.require_full_rank("projection_surface_area");
    return zonotope_surface_area(project_zonotope(z, xi));
}

} // namespace shadowgauge

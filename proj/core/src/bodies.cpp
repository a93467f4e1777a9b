#include "shadowgauge/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "facet_normals.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/numeric.hpp"
#include "shadowgauge/tolerances.hpp"

namespace shadowgauge {

namespace {

Matrix stack_columns(int dim, const std::vector<Vector>& cols)
{
    if (dim < 1)
        throw Error(Errc::invalid_argument, "dimension must be positive");
    Matrix m(dim, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim)
            throw Error(Errc::dimension_mismatch,
                        "generator " + std::to_string(j) + " has dimension " +
                            std::to_string(cols[j].size()) + ", expected " + std::to_string(dim));
        m.col(static_cast<Eigen::Index>(j)) = cols[j];
    }
    return m;
}

void require_positive_scale(double t)
{
    if (!(t > 0.0) || !std::isfinite(t))
        throw Error(Errc::invalid_argument, "scale factor must be positive and finite");
}

} // namespace

Zonotope::Zonotope(int dim, std::vector<Vector> generators, std::size_t cap)
    : Zonotope(stack_columns(dim, generators), cap)
{
}

Zonotope::Zonotope(Matrix generators, std::size_t cap) : gens_(std::move(generators)), cap_(cap)
{
    if (gens_.rows() < 1)
        throw Error(Errc::invalid_argument, "zonotope dimension must be positive");
    if (generator_count() > cap_)
        throw Error(Errc::generator_cap_exceeded,
                    std::to_string(generator_count()) + " generators exceed the cap of " +
                        std::to_string(cap_));
    if (!gens_.allFinite())
        throw Error(Errc::invalid_argument, "zonotope generators must be finite");
}

int Zonotope::rank() const
{
    if (gens_.cols() == 0)
        return 0;
    Eigen::JacobiSVD<Matrix> svd(gens_);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0)
        return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > tol::rank * sv[0])
            ++r;
    }
    return r;
}

void Zonotope::require_full_rank(const char* op) const
{
    if (!is_full_rank())
        throw Error(Errc::degenerate_body,
                    std::string(op) + ": zonotope generators do not span R^" + std::to_string(dim()));
}

Zonotope Zonotope::scaled(double t) const
{
    require_positive_scale(t);
    return Zonotope(Matrix(gens_ * t), cap_);
}

Zonotope Zonotope::transformed(const Matrix& linear) const
{
    if (linear.cols() != dim())
        throw Error(Errc::dimension_mismatch, "transform does not match zonotope dimension");
    return Zonotope(Matrix(linear * gens_), cap_);
}

Ball::Ball(int d, double r) : dim(d), radius(r)
{
    if (d < 1)
        throw Error(Errc::invalid_argument, "ball dimension must be positive");
    if (!(r > 0.0) || !std::isfinite(r))
        throw Error(Errc::invalid_argument, "ball radius must be positive");
}

FacetBody::FacetBody(int dim, std::vector<Vector> vertices, std::span<const FacetData> facets)
    : dim_(dim), vertices_(std::move(vertices)), measure_([&] {
          std::vector<RawAtom> raw;
          raw.reserve(facets.size());
          for (const auto& f : facets) {
              if (f.u.dim() != dim)
                  throw Error(Errc::dimension_mismatch, "facet normal has wrong dimension");
              raw.push_back(RawAtom{f.u.coords(), f.a});
          }
          return canonicalize_measure(dim, raw);
      }())
{
    if (vertices_.empty())
        throw Error(Errc::invalid_argument, "facet body needs vertices");
    double scale = 0.0;
    for (const auto& v : vertices_) {
        if (v.size() != dim)
            throw Error(Errc::dimension_mismatch, "vertex has wrong dimension");
        if (!v.allFinite())
            throw Error(Errc::invalid_argument, "vertex is not finite");
        scale = std::max(scale, v.norm());
    }
    for (const auto& v : vertices_) {
        const bool mirrored = std::any_of(vertices_.begin(), vertices_.end(), [&](const Vector& w) {
            return (v + w).norm() <= tol::offset_consistency * scale;
        });
        if (!mirrored)
            throw Error(Errc::inconsistent_measure, "vertex set is not origin-symmetric");
    }

    auto vertex_support = [&](const Vector& u) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& v : vertices_)
            best = std::max(best, v.dot(u));
        return best;
    };

    offsets_.reserve(measure_.size());
    CompensatedSum pyramid;
    for (const auto& atom : measure_.atoms()) {
        const double h = vertex_support(atom.u.coords());
        if (!(h > 0.0))
            throw Error(Errc::degenerate_body, "origin is not interior to the facet body");
        for (const auto& f : facets) {
            if (f.u.dot(atom.u) > 1.0 - tol::direction_merge &&
                std::abs(f.h - h) > tol::offset_consistency * std::max(std::abs(h), std::abs(f.h)))
                throw Error(Errc::inconsistent_measure,
                            "facet offset " + std::to_string(f.h) +
                                " disagrees with vertex support " + std::to_string(h));
        }
        offsets_.push_back(h);
        pyramid += h * atom.a;
    }
    if (!(pyramid.value() > 0.0))
        throw Error(Errc::degenerate_body, "facet body has non-positive volume");
}

FacetBody FacetBody::scaled(double t) const
{
    require_positive_scale(t);
    std::vector<Vector> verts;
    verts.reserve(vertices_.size());
    for (const auto& v : vertices_)
        verts.push_back(v * t);
    const double area_scale = std::pow(t, dim_ - 1);
    std::vector<FacetData> facets;
    facets.reserve(measure_.size());
    for (std::size_t i = 0; i < measure_.size(); ++i) {
        const auto& atom = measure_.atoms()[i];
        facets.push_back(FacetData{atom.u, atom.a * area_scale, offsets_[i] * t});
    }
    return FacetBody(dim_, std::move(verts), facets);
}

FacetBody FacetBody::transformed(const Matrix& orthogonal) const
{
    if (orthogonal.rows() != dim_ || orthogonal.cols() != dim_)
        throw Error(Errc::dimension_mismatch, "transform does not match facet body dimension");
    const Matrix gram = orthogonal.transpose() * orthogonal;
    if (!gram.isIdentity(1e-10))
        throw Error(Errc::invalid_argument, "facet bodies only support orthogonal transforms");
    std::vector<Vector> verts;
    verts.reserve(vertices_.size());
    for (const auto& v : vertices_)
        verts.push_back(orthogonal * v);
    std::vector<FacetData> facets;
    facets.reserve(measure_.size());
    for (std::size_t i = 0; i < measure_.size(); ++i) {
        const auto& atom = measure_.atoms()[i];
        facets.push_back(
            FacetData{Direction::normalized(orthogonal * atom.u.coords()), atom.a, offsets_[i]});
    }
    return FacetBody(dim_, std::move(verts), facets);
}

int Body::dim() const
{
    return std::visit(
        [](const auto& b) -> int {
            if constexpr (std::is_same_v<std::decay_t<decltype(b)>, Ball>)
                return b.dim;
            else
                return b.dim();
        },
        v_);
}

const char* Body::kind() const noexcept
{
    switch (v_.index()) {
    case 0: return "zonotope";
    case 1: return "ball";
    default: return "facet_body";
    }
}

Body Body::scaled(double t) const
{
    return std::visit(
        [t](const auto& b) -> Body {
            if constexpr (std::is_same_v<std::decay_t<decltype(b)>, Ball>) {
                require_positive_scale(t);
                return Ball(b.dim, b.radius * t);
            } else {
                return b.scaled(t);
            }
        },
        v_);
}

Body Body::transformed(const Matrix& orthogonal) const
{
    return std::visit(
        [&](const auto& b) -> Body {
            if constexpr (std::is_same_v<std::decay_t<decltype(b)>, Ball>)
                return b;
            else
                return b.transformed(orthogonal);
        },
        v_);
}

double support(const Zonotope& z, const Vector& x)
{
    if (x.size() != z.dim())
        throw Error(Errc::dimension_mismatch, "support: vector dimension does not match zonotope");
    CompensatedSum s;
    for (Eigen::Index j = 0; j < z.generators().cols(); ++j)
        s += std::abs(z.generators().col(j).dot(x));
    return s.value();
}

double support(const Body& body, const Vector& x)
{
    if (x.size() != body.dim())
        throw Error(Errc::dimension_mismatch, "support: vector dimension does not match body");
    if (body.is<Zonotope>())
        return support(body.as<Zonotope>(), x);
    if (body.is<Ball>())
        return body.as<Ball>().radius * x.norm();
    const auto& verts = body.as<FacetBody>().vertices();
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : verts)
        best = std::max(best, v.dot(x));
    return best;
}

FacetMeasure surface_measure(const Zonotope& z)
{
    const int n = z.dim();
    if (n < 2)
        throw Error(Errc::invalid_argument, "surface measure needs dimension >= 2");
    z.require_full_rank("surface_measure");

    const Matrix& g = z.generators();
    const auto m = static_cast<std::size_t>(g.cols());
    const double facet_scale = std::ldexp(1.0, n - 1);

    std::vector<RawAtom> raw;
    raw.reserve(2 * binomial(m, static_cast<std::size_t>(n - 1)));
    Matrix sub(n, n - 1);
    for_each_combination(m, static_cast<std::size_t>(n - 1), [&](const std::vector<std::size_t>& idx) {
        double norm_product = 1.0;
        for (int c = 0; c < n - 1; ++c) {
            sub.col(c) = g.col(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(c)]));
            norm_product *= sub.col(c).norm();
        }
        if (norm_product == 0.0)
            return;
        const Vector w = detail::cofactor_normal(sub);
        const double gram_root = w.norm();
        if (gram_root <= tol::rank * norm_product)
            return;
        const double a = facet_scale * gram_root;
        raw.push_back(RawAtom{w, a});
        raw.push_back(RawAtom{-w, a});
    });
    return canonicalize_measure(n, raw);
}

FacetMeasure surface_measure(const Body& body)
{
    if (body.is<Ball>())
        throw Error(Errc::unsupported_measure, "the ball has a continuous surface area measure");
    if (body.is<Zonotope>())
        return surface_measure(body.as<Zonotope>());
    return body.as<FacetBody>().measure();
}

FacetBody make_cross_polytope(int n, double s)
{
    if (n < 2)
        throw Error(Errc::invalid_argument, "cross-polytope needs dimension >= 2");
    if (n > 12)
        throw Error(Errc::invalid_argument, "cross-polytope dimension above 12 is not supported");
    require_positive_scale(s);

    std::vector<Vector> verts;
    verts.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        verts.push_back(Vector::Unit(n, i) * s);
        verts.push_back(-Vector::Unit(n, i) * s);
    }

    const double root_n = std::sqrt(static_cast<double>(n));
    const double area = std::pow(s, n - 1) * root_n / std::tgamma(static_cast<double>(n));
    const double offset = s / root_n;
    std::vector<FacetData> facets;
    const std::size_t count = std::size_t{1} << n;
    facets.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Vector u(n);
        for (int i = 0; i < n; ++i)
            u[i] = ((mask >> i) & 1U) ? -1.0 / root_n : 1.0 / root_n;
        facets.push_back(FacetData{Direction::normalized(u), area, offset});
    }
    return FacetBody(n, std::move(verts), facets);
}

Zonotope make_cube(int n, double half_side)
{
    require_positive_scale(half_side);
    return Zonotope(Matrix(Matrix::Identity(n, n) * half_side));
}

Zonotope make_box(std::span<const double> half_widths)
{
    const auto n = static_cast<Eigen::Index>(half_widths.size());
    Matrix g = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        require_positive_scale(half_widths[static_cast<std::size_t>(i)]);
        g(i, i) = half_widths[static_cast<std::size_t>(i)];
    }
    return Zonotope(std::move(g));
}

} // namespace shadowgauge

#pragma once

// Test-only brute-force oracles. None of these share code paths with the
// library formulas they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "shadowgauge/bodies.hpp"

namespace sg_test {

using shadowgauge::Matrix;
using shadowgauge::Vector;

inline double rel_diff(double a, double b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

/// All 2^m sign combinations sum_j +-v_j (a superset of the vertices).
inline std::vector<Vector> zonotope_corner_points(const shadowgauge::Zonotope& z)
{
    const Matrix& g = z.generators();
    const auto m = static_cast<int>(g.cols());
    std::vector<Vector> pts;
    pts.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        Vector p = Vector::Zero(g.rows());
        for (int j = 0; j < m; ++j)
            p += ((mask >> j) & 1U) ? Vector(g.col(j)) : Vector(-g.col(j));
        pts.push_back(p);
    }
    return pts;
}

/// Support as a maximum over the sign-combination points.
inline double brute_support(const shadowgauge::Zonotope& z, const Vector& x)
{
    double best = -1e300;
    for (const auto& p : zonotope_corner_points(z))
        best = std::max(best, p.dot(x));
    return best;
}

struct P2 {
    double x, y;
};

/// Andrew's monotone chain; returns the hull counter-clockwise.
inline std::vector<P2> convex_hull(std::vector<P2> pts)
{
    std::sort(pts.begin(), pts.end(), [](P2 a, P2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    auto cross = [](P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
    std::vector<P2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline double hull_area(const std::vector<P2>& pts)
{
    const auto hull = convex_hull(pts);
    double a = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * std::abs(a);
}

inline double hull_perimeter(const std::vector<P2>& pts)
{
    const auto hull = convex_hull(pts);
    double s = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        s += std::hypot(q.x - p.x, q.y - p.y);
    }
    return s;
}

/// Orthonormal basis of xi^perp in R^3 by Gram-Schmidt against the axis
/// least aligned with xi.
inline std::pair<Vector, Vector> plane_basis_3d(const Vector& xi)
{
    Eigen::Index k = 0;
    xi.cwiseAbs().minCoeff(&k);
    Vector a = Vector::Unit(3, k);
    a -= a.dot(xi) * xi;
    a.normalize();
    Eigen::Vector3d b3 = Eigen::Vector3d(xi).cross(Eigen::Vector3d(a));
    return {a, Vector(b3)};
}

/// Shadow of a 3D zonotope on xi^perp as a planar point cloud.
inline std::vector<P2> shadow_points_3d(const shadowgauge::Zonotope& z, const Vector& xi)
{
    const auto [a, b] = plane_basis_3d(xi);
    std::vector<P2> out;
    for (const auto& p : zonotope_corner_points(z))
        out.push_back({p.dot(a), p.dot(b)});
    return out;
}

inline std::vector<P2> planar_points(const shadowgauge::Zonotope& z)
{
    std::vector<P2> out;
    for (const auto& p : zonotope_corner_points(z))
        out.push_back({p[0], p[1]});
    return out;
}

} // namespace sg_test

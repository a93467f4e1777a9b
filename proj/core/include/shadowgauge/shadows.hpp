#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shadowgauge/bodies.hpp"

namespace shadowgauge {

/// n-1 orthonormal vectors spanning the hyperplane orthogonal to xi, as the
/// columns of an n x (n-1) matrix. Built from the Householder reflection
/// sending xi to the signed coordinate axis of its largest entry, so the
/// frame is a deterministic function of xi.
Matrix orthobasis(const Direction& xi);

/// Z | xi^perp expressed in orthobasis(xi) coordinates. Generators that
/// project to (numerically) zero are dropped.
Zonotope project_zonotope(const Zonotope& z, const Direction& xi);

/// Shadow function xi -> |K | xi^perp| with the surface measure computed
/// once. For polytopes it is the support function of the projection body,
/// sum_k a_k |<xi, u_k>| over antipodal pairs.
class ShadowFunction {
public:
    explicit ShadowFunction(const Body& body);

    int dim() const noexcept { return dim_; }
    double operator()(const Direction& xi) const;

    /// Generators a_k u_k of the projection body (empty for balls).
    const Matrix& projection_generators() const noexcept { return gens_; }

private:
    int dim_;
    bool is_ball_ = false;
    double ball_value_ = 0.0;
    Matrix gens_;
};

/// (n-1)-volume of the orthogonal projection onto xi^perp, via the Cauchy
/// formula (1/2) sum_i a_i |<xi, u_i>| (closed form for balls).
double projection_volume(const Body& body, const Direction& xi);

/// The projection body: a zonotope with one generator a_k u_k per antipodal
/// pair of the surface measure, or the ball of radius r^{n-1}|B^{n-1}|.
/// The returned zonotope's generator cap is raised to fit its generators.
Body projection_body(const Body& body);

/// Surface area of Z | xi^perp inside xi^perp. Requires n >= 3.
double projection_surface_area(const Zonotope& z, const Direction& xi);

struct SphereSearchConfig {
    /// Coarse sample count; 0 selects the default (2^13 for n <= 4,
    /// doubling per extra dimension, capped at 2^18).
    std::int64_t coarse_samples = 0;
    /// Number of coarse candidates refined by local search.
    int restarts = 8;
    /// Local search stops once the step drops below this (radians).
    double shrink_tol = 1e-7;
};

std::int64_t default_coarse_samples(int n);

struct SphereMinResult {
    Direction argmin;
    double value;
    std::int64_t evaluations;
    double refinement_radius;
};

/// Heuristic global minimum of an even function on S^{n-1}: a deterministic
/// low-discrepancy hemisphere sample plus the coordinate axes, followed by
/// derivative-free pattern search on the sphere from the best `restarts`
/// well-separated candidates. Non-finite values throw evaluation_error.
SphereMinResult min_over_sphere(const std::function<double(const Direction&)>& f, int n,
                                const SphereSearchConfig& cfg = {});

} // namespace shadowgauge

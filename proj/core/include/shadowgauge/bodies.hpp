#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "shadowgauge/direction.hpp"
#include "shadowgauge/measure.hpp"

namespace shadowgauge {

inline constexpr std::size_t default_generator_cap = 20;

/// Sum of centered segments [-v_j, v_j]. Generators are the columns of an
/// n x m matrix. A zonotope may be rank deficient; operations that need a
/// full-dimensional body check is_full_rank() and throw degenerate_body.
class Zonotope {
public:
    Zonotope(int dim, std::vector<Vector> generators,
             std::size_t cap = default_generator_cap);
    Zonotope(Matrix generators, std::size_t cap = default_generator_cap);

    int dim() const noexcept { return static_cast<int>(gens_.rows()); }
    std::size_t generator_count() const noexcept { return static_cast<std::size_t>(gens_.cols()); }
    std::size_t cap() const noexcept { return cap_; }
    const Matrix& generators() const noexcept { return gens_; }
    Vector generator(std::size_t j) const { return gens_.col(static_cast<Eigen::Index>(j)); }

    int rank() const;
    bool is_full_rank() const { return rank() == dim(); }

    /// Throws degenerate_body unless the generators span R^n.
    void require_full_rank(const char* op) const;

    Zonotope scaled(double t) const;
    Zonotope transformed(const Matrix& linear) const;

private:
    Matrix gens_;
    std::size_t cap_;
};

struct Ball {
    int dim;
    double radius;

    Ball(int dim, double radius);
};

struct FacetData {
    Direction u;
    double a; // facet volume
    double h; // support value at u
};

/// Polytope given by a symmetric vertex set and its facet measure with
/// per-facet offsets.
class FacetBody {
public:
    /// Validates vertex symmetry, offset/vertex self-consistency, and a
    /// positive pyramid volume. Offsets of merged atoms must agree.
    FacetBody(int dim, std::vector<Vector> vertices, std::span<const FacetData> facets);

    int dim() const noexcept { return dim_; }
    const std::vector<Vector>& vertices() const noexcept { return vertices_; }
    const FacetMeasure& measure() const noexcept { return measure_; }
    /// offsets()[i] is the support value at measure().atoms()[i].u.
    const std::vector<double>& offsets() const noexcept { return offsets_; }

    FacetBody scaled(double t) const;
    FacetBody transformed(const Matrix& orthogonal) const;

private:
    int dim_;
    std::vector<Vector> vertices_;
    FacetMeasure measure_;
    std::vector<double> offsets_;
};

class Body {
public:
    using Variant = std::variant<Zonotope, Ball, FacetBody>;

    Body(Zonotope z) : v_(std::move(z)) {}
    Body(Ball b) : v_(std::move(b)) {}
    Body(FacetBody f) : v_(std::move(f)) {}

    int dim() const;
    const Variant& variant() const noexcept { return v_; }

    template <typename T> bool is() const noexcept { return std::holds_alternative<T>(v_); }
    template <typename T> const T& as() const { return std::get<T>(v_); }

    /// Short name: "zonotope", "ball" or "facet_body".
    const char* kind() const noexcept;

    Body scaled(double t) const;
    /// Image under an orthogonal map (FacetBody requires orthogonality).
    Body transformed(const Matrix& orthogonal) const;

private:
    Variant v_;
};

/// Support function h(x) = max over the body of <y, x>.
double support(const Body& body, const Vector& x);
double support(const Zonotope& z, const Vector& x);

/// Exact discrete surface area measure. Ball throws unsupported_measure,
/// a rank-deficient zonotope throws degenerate_body.
FacetMeasure surface_measure(const Body& body);
FacetMeasure surface_measure(const Zonotope& z);

/// s * conv(+-e_1, ..., +-e_n).
FacetBody make_cross_polytope(int n, double s);

/// The cube [-1,1]^n as a zonotope.
Zonotope make_cube(int n, double half_side = 1.0);

/// Axis-aligned box with the given half-widths.
Zonotope make_box(std::span<const double> half_widths);

} // namespace shadowgauge

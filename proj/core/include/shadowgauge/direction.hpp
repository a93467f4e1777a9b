#pragma once

#include <Eigen/Core>

namespace shadowgauge {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A unit vector in R^n, n >= 2.
class Direction {
public:
    /// Validates that v already has unit length (within tol::unit_norm).
    static Direction from_unit(const Vector& v);

    /// Normalizes v; throws invalid_argument for the zero vector.
    static Direction normalized(const Vector& v);

    /// The k-th standard basis vector of R^dim.
    static Direction axis(int dim, int k);

    int dim() const noexcept { return static_cast<int>(coords_.size()); }
    const Vector& coords() const noexcept { return coords_; }
    double operator[](int i) const { return coords_[i]; }

    double dot(const Vector& x) const { return coords_.dot(x); }
    double dot(const Direction& other) const { return coords_.dot(other.coords_); }

    Direction operator-() const { return Direction(-coords_); }

private:
    explicit Direction(Vector v) : coords_(std::move(v)) {}

    Vector coords_;
};

} // namespace shadowgauge

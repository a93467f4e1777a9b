#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shadowgauge/direction.hpp"

namespace shadowgauge {

struct FacetAtom {
    Direction u;
    double a; // (n-1)-volume of the facet with outer normal u
};

/// Unnormalized atom as fed into canonicalize_measure.
struct RawAtom {
    Vector normal;
    double a;
};

/// Discrete surface area measure of an origin-symmetric polytope.
///
/// Atoms are stored in antipodal pairs: atoms()[2k] and atoms()[2k+1] are
/// (u_k, a_k) and (-u_k, a_k). The representative u_k has its first
/// non-negligible coordinate positive. Instances only come out of
/// canonicalize_measure, which enforces symmetry and Minkowski balance.
class FacetMeasure {
public:
    int dim() const noexcept { return dim_; }
    std::span<const FacetAtom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    std::size_t pair_count() const noexcept { return atoms_.size() / 2; }

    /// Representative of the k-th antipodal pair.
    const FacetAtom& pair(std::size_t k) const { return atoms_[2 * k]; }

    /// Total mass (the surface area).
    double total() const;

private:
    friend FacetMeasure canonicalize_measure(int dim, std::span<const RawAtom> atoms);
    FacetMeasure(int dim, std::vector<FacetAtom> atoms) : dim_(dim), atoms_(std::move(atoms)) {}

    int dim_;
    std::vector<FacetAtom> atoms_;
};

/// Normalizes normals, merges atoms pointing the same way, drops atoms at or
/// below tol::facet_volume, and validates symmetry and balance. Throws
/// Errc::inconsistent_measure when the result is not origin-symmetric or not
/// balanced, and Errc::invalid_argument for zero normals.
FacetMeasure canonicalize_measure(int dim, std::span<const RawAtom> atoms);

} // namespace shadowgauge

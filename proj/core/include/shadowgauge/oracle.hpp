#pragma once

#include <cstdint>
#include <vector>

#include "shadowgauge/bodies.hpp"
#include "shadowgauge/calculus.hpp"

namespace shadowgauge {

struct Halfspace {
    Direction u;
    double h; // |<x, u>| <= h
};

/// Symmetric slab representation: the body is the intersection of the slabs.
struct HRep {
    int dim;
    std::vector<Halfspace> halfspaces;
};

/// One slab per antipodal facet pair of a full-rank zonotope, with offset
/// equal to the zonotope's support at the normal.
HRep zonotope_facets(const Zonotope& z);

/// true iff |<x, u_i>| <= h_i + 1e-12 for every slab.
bool contains(const HRep& hrep, const Vector& x);

/// Radial function: the largest t with t x inside the body (x nonzero).
double radial(const HRep& hrep, const Vector& x);

/// Rejection-sampling volume in the bounding box of Z, with binomial
/// standard error. Deterministic for a fixed seed regardless of thread
/// count. n_samples >= 10^4.
Estimate mc_volume(const Zonotope& z, std::int64_t n_samples, std::uint64_t seed);

} // namespace shadowgauge

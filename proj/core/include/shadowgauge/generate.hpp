#pragma once

#include <cstddef>
#include <cstdint>

#include "shadowgauge/bodies.hpp"

namespace shadowgauge {

/// Seeded random full-rank zonotope: generator directions uniform on the
/// sphere, lengths uniform in [0.5, 1.5]. Draws are resampled while the
/// generator matrix has smallest singular value below 0.05 of its largest
/// (only applies when m >= n). `index` selects an independent stream so that
/// body i of a batch does not depend on the other bodies.
Zonotope random_zonotope(int dim, std::size_t generators, std::uint64_t seed, std::uint64_t index);

/// Haar-ish random orthogonal matrix (QR of a Gaussian matrix with the sign
/// of R's diagonal folded in).
Matrix random_orthogonal(int dim, std::uint64_t seed);

} // namespace shadowgauge

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "shadowgauge/bodies.hpp"

namespace shadowgauge {

enum class VolumeMethod { determinant, pyramid, closed_form, monte_carlo };

const char* to_string(VolumeMethod m) noexcept;

struct VolumeResult {
    double value;
    VolumeMethod method;
    std::optional<double> std_error; // set iff method == monte_carlo
};

struct Estimate {
    double value;
    double std_error;
};

/// Exact volume: closed form for balls, 2^n * sum |det v_J| over n-subsets
/// for zonotopes, (1/n) sum h_i a_i for facet bodies. A rank-deficient
/// zonotope throws degenerate_body.
VolumeResult volume(const Body& body);

/// Determinant-path volume of a zonotope (any dimension >= 1).
double zonotope_volume(const Zonotope& z);

/// (1/n) sum_i support_at(u_i) a_i over the atoms of the measure.
double volume_from_measure(const FacetMeasure& measure,
                           const std::function<double(const Direction&)>& support_at);

/// Total mass of the surface area measure; n |B^n| r^{n-1} for balls.
double surface_area(const Body& body);

/// Surface area of a full-rank zonotope, summing facet volumes over
/// (n-1)-subsets directly (no measure canonicalization).
double zonotope_surface_area(const Zonotope& z);

/// Monte Carlo surface area through the Cauchy formula: the mean shadow
/// over uniform directions times n|B^n| / |B^{n-1}|. n_samples >= 1000.
Estimate cauchy_surface_area(const Body& body, std::int64_t n_samples, std::uint64_t seed);

/// V_1(K, L) = (1/n) sum_i h_L(u_i) a_i over the surface measure of K.
double mixed_volume_v1(const Body& k, const Body& l);

/// V_1(K, L) - |K|^{(n-1)/n} |L|^{1/n}; never below -1e-9 V_1 in exact
/// arithmetic.
double minkowski_first_gap(const Body& k, const Body& l);

/// Generator concatenation. The result's cap is the larger of the two.
Zonotope zonotope_sum(const Zonotope& a, const Zonotope& b);

/// |P + eps B^2| = area + perimeter * eps + pi * eps^2 for a planar zonotope.
double steiner_2d(const Zonotope& p, double eps);

} // namespace shadowgauge

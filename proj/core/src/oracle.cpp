#include "shadowgauge/oracle.hpp"

#include <cmath>
#include <limits>

#include "shadowgauge/error.hpp"
#include "shadowgauge/parallel.hpp"
#include "shadowgauge/random.hpp"
#include "shadowgauge/tolerances.hpp"

namespace shadowgauge {

HRep zonotope_facets(const Zonotope& z)
{
    const FacetMeasure measure = surface_measure(z);
    HRep hrep{z.dim(), {}};
    hrep.halfspaces.reserve(measure.pair_count());
    for (std::size_t k = 0; k < measure.pair_count(); ++k) {
        const Direction& u = measure.pair(k).u;
        hrep.halfspaces.push_back(Halfspace{u, support(z, u.coords())});
    }
    return hrep;
}

bool contains(const HRep& hrep, const Vector& x)
{
    if (x.size() != hrep.dim)
        throw Error(Errc::dimension_mismatch, "contains: point dimension does not match");
    for (const auto& hs : hrep.halfspaces) {
        if (std::abs(hs.u.dot(x)) > hs.h + tol::membership)
            return false;
    }
    return true;
}

double radial(const HRep& hrep, const Vector& x)
{
    if (x.size() != hrep.dim)
        throw Error(Errc::dimension_mismatch, "radial: point dimension does not match");
    double t = std::numeric_limits<double>::infinity();
    for (const auto& hs : hrep.halfspaces) {
        const double d = std::abs(hs.u.dot(x));
        if (d > 0.0)
            t = std::min(t, hs.h / d);
    }
    return t;
}

Estimate mc_volume(const Zonotope& z, std::int64_t n_samples, std::uint64_t seed)
{
    if (n_samples < 10000)
        throw Error(Errc::invalid_argument, "mc_volume needs at least 10^4 samples");
    const HRep hrep = zonotope_facets(z);
    const int n = z.dim();

    Vector half(n);
    double box = 1.0;
    for (int k = 0; k < n; ++k) {
        half[k] = support(z, Vector::Unit(n, k));
        box *= 2.0 * half[k];
    }

    const CounterRng rng(seed, 0x3c);
    constexpr int chunks = 64;
    std::vector<std::int64_t> hits(chunks, 0);
    parallel_chunks(n_samples, chunks, [&](std::int64_t begin, std::int64_t end, int chunk) {
        Vector x(n);
        std::int64_t local = 0;
        for (std::int64_t i = begin; i < end; ++i) {
            for (int k = 0; k < n; ++k) {
                const auto counter = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) +
                                     static_cast<std::uint64_t>(k);
                x[k] = (2.0 * rng.uniform(counter) - 1.0) * half[k];
            }
            if (contains(hrep, x))
                ++local;
        }
        hits[static_cast<std::size_t>(chunk)] = local;
    });

    std::int64_t total = 0;
    for (const auto h : hits)
        total += h;
    const double p = static_cast<double>(total) / static_cast<double>(n_samples);
    return {box * p, box * std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples))};
}

} // namespace shadowgauge

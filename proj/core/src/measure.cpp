#include "shadowgauge/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "shadowgauge/error.hpp"
#include "shadowgauge/numeric.hpp"
#include "shadowgauge/tolerances.hpp"

namespace shadowgauge {

Direction Direction::from_unit(const Vector& v)
{
    if (v.size() < 2)
        throw Error(Errc::invalid_argument, "direction needs dimension >= 2");
    const double norm = v.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol::unit_norm)
        throw Error(Errc::invalid_argument,
                    "direction is not a unit vector (norm " + std::to_string(norm) + ")");
    return Direction(v);
}

Direction Direction::normalized(const Vector& v)
{
    if (v.size() < 2)
        throw Error(Errc::invalid_argument, "direction needs dimension >= 2");
    const double norm = v.norm();
    if (!std::isfinite(norm) || norm == 0.0)
        throw Error(Errc::invalid_argument, "cannot normalize a zero or non-finite vector");
    return Direction(v / norm);
}

Direction Direction::axis(int dim, int k)
{
    if (dim < 2 || k < 0 || k >= dim)
        throw Error(Errc::invalid_argument, "axis index out of range");
    return Direction(Vector::Unit(dim, k));
}

double FacetMeasure::total() const
{
    CompensatedSum s;
    for (const auto& atom : atoms_)
        s += atom.a;
    return s.value();
}

namespace {

// Projection key used to bucket nearly-equal unit vectors. Two unit vectors
// with dot > 1 - 1e-10 are within 1.5e-5 of each other, hence so are their
// keys; the window below leaves a margin.
constexpr double key_window = 4e-5;

Vector key_axis(int dim)
{
    Vector r(dim);
    double x = 1.0;
    for (int i = 0; i < dim; ++i) {
        r[i] = x;
        x *= 0.6180339887498949;
        x += 0.1414213562373095;
    }
    return r.normalized();
}

// Orientation rule for pair representatives: first coordinate with
// magnitude above 1e-9 is positive.
bool is_positive_representative(const Vector& u)
{
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) > 1e-9)
            return u[i] > 0.0;
    }
    return true;
}

struct Cluster {
    Vector u;
    CompensatedSum a;
    double key = 0.0;
};

} // namespace

FacetMeasure canonicalize_measure(int dim, std::span<const RawAtom> atoms)
{
    if (dim < 2)
        throw Error(Errc::invalid_argument, "surface measure needs dimension >= 2");

    const Vector axis = key_axis(dim);
    const std::size_t k = atoms.size();
    std::vector<Vector> units(k);
    std::vector<double> keys(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& raw = atoms[i];
        if (raw.normal.size() != dim)
            throw Error(Errc::dimension_mismatch, "atom normal has wrong dimension");
        const double norm = raw.normal.norm();
        if (!std::isfinite(norm) || norm == 0.0)
            throw Error(Errc::invalid_argument, "atom normal must be nonzero and finite");
        if (!std::isfinite(raw.a) || raw.a < 0.0)
            throw Error(Errc::invalid_argument, "atom volume must be finite and non-negative");
        units[i] = raw.normal / norm;
        keys[i] = units[i].dot(axis);
    }

    // Merge atoms sharing a direction. Cluster ids are assigned in order of
    // first appearance so the output does not depend on the sort.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return keys[l] < keys[r]; });

    // Union-find with owner[i] <= i, so every root is its cluster's first atom.
    std::vector<std::size_t> owner(k);
    std::iota(owner.begin(), owner.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (owner[x] != x)
            x = owner[x] = owner[owner[x]];
        return x;
    };
    for (std::size_t pos = 0; pos < k; ++pos) {
        const std::size_t i = order[pos];
        for (std::size_t back = pos; back-- > 0;) {
            const std::size_t j = order[back];
            if (keys[i] - keys[j] > key_window)
                break;
            if (units[i].dot(units[j]) > 1.0 - tol::direction_merge) {
                const std::size_t ri = find(i), rj = find(j);
                owner[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        owner[i] = find(i);

    std::vector<Cluster> clusters;
    std::vector<std::size_t> cluster_of(k, 0);
    std::vector<std::ptrdiff_t> slot(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t root = owner[i];
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
            clusters.push_back(Cluster{units[root], {}, keys[root]});
        }
        cluster_of[i] = static_cast<std::size_t>(slot[root]);
        clusters[cluster_of[i]].a += atoms[i].a;
    }

    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        if (clusters[c].a.value() > tol::facet_volume)
            live.push_back(c);
    }

    // Pair each surviving cluster with its antipode.
    std::vector<std::size_t> by_key = live;
    std::stable_sort(by_key.begin(), by_key.end(), [&](std::size_t l, std::size_t r) {
        return clusters[l].key < clusters[r].key;
    });
    std::vector<bool> paired(clusters.size(), false);
    std::vector<FacetAtom> out;
    out.reserve(live.size());
    for (const std::size_t c : live) {
        if (paired[c])
            continue;
        const double target = -clusters[c].key;
        auto it = std::lower_bound(by_key.begin(), by_key.end(), target - key_window,
                                   [&](std::size_t idx, double v) { return clusters[idx].key < v; });
        std::ptrdiff_t partner = -1;
        for (; it != by_key.end() && clusters[*it].key <= target + key_window; ++it) {
            if (*it != c && !paired[*it] &&
                clusters[c].u.dot(clusters[*it].u) < -(1.0 - tol::direction_merge)) {
                partner = static_cast<std::ptrdiff_t>(*it);
                break;
            }
        }
        if (partner < 0)
            throw Error(Errc::inconsistent_measure, "surface measure is not origin-symmetric");
        const auto p = static_cast<std::size_t>(partner);
        const double a1 = clusters[c].a.value();
        const double a2 = clusters[p].a.value();
        if (std::abs(a1 - a2) > tol::balance * std::max(a1, a2))
            throw Error(Errc::inconsistent_measure,
                        "antipodal facet volumes differ: " + std::to_string(a1) + " vs " +
                            std::to_string(a2));
        paired[c] = paired[p] = true;

        Vector rep = clusters[c].u;
        if (!is_positive_representative(rep))
            rep = -rep;
        const double a = 0.5 * (a1 + a2);
        out.push_back(FacetAtom{Direction::normalized(rep), a});
        out.push_back(FacetAtom{-out.back().u, a});
    }

    CompensatedSum mass;
    Vector moment = Vector::Zero(dim);
    for (const auto& atom : out) {
        mass += atom.a;
        moment += atom.a * atom.u.coords();
    }
    if (moment.norm() > tol::balance * mass.value())
        throw Error(Errc::inconsistent_measure, "surface measure is not balanced");

    return FacetMeasure(dim, std::move(out));
}

} // namespace shadowgauge

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shadowgauge/bodies.hpp"
#include "shadowgauge/calculus.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/generate.hpp"
#include "shadowgauge/numeric.hpp"
#include "shadowgauge/random.hpp"
#include "support.hpp"

using namespace shadowgauge;
using sg_test::rel_diff;

namespace {

Vector vec(std::initializer_list<double> xs)
{
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs)
        v[i++] = x;
    return v;
}

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected shadowgauge::Error");
    return Errc::invalid_argument;
}

// Finds the atom with normal u; returns its volume or -1.
double atom_volume(const FacetMeasure& m, const Vector& u)
{
    for (const auto& atom : m.atoms()) {
        if (atom.u.dot(u.normalized()) > 1.0 - 1e-10)
            return atom.a;
    }
    return -1.0;
}

} // namespace

TEST_SUITE("bodies")
{
    TEST_CASE("direction validation")
    {
        CHECK_NOTHROW(Direction::from_unit(vec({0.6, 0.8})));
        CHECK(code_of([] { Direction::from_unit(vec({0.6, 0.81})); }) == Errc::invalid_argument);
        CHECK(code_of([] { Direction::normalized(vec({0.0, 0.0, 0.0})); }) == Errc::invalid_argument);
        CHECK(code_of([] { Direction::normalized(vec({1.0})); }) == Errc::invalid_argument);
        CHECK(Direction::normalized(vec({3.0, 4.0}))[1] == doctest::Approx(0.8).epsilon(1e-15));
    }

    TEST_CASE("support examples")
    {
        CHECK(support(Ball(3, 1.0), vec({0, 0, 2})) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(support(make_cube(3), vec({1, 1, 1})) == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(support(make_cross_polytope(3, 1.0), vec({0.5, -2, 1})) == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(code_of([] { support(make_cube(3), vec({1, 1})); }) == Errc::dimension_mismatch);
        CHECK(code_of([] { support(Body(Ball(2, 1.0)), vec({1, 1, 1})); }) == Errc::dimension_mismatch);
    }

    TEST_CASE("zonotope support matches brute-force vertex maximum")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const int n = 2 + static_cast<int>(seed % 3);
            const auto z = random_zonotope(n, static_cast<std::size_t>(n + seed % 4), 11, seed);
            const CounterRng rng(seed, 7);
            for (std::uint64_t s = 0; s < 8; ++s) {
                const Vector x = rng.on_sphere(s, n) * (0.5 + rng.uniform(1000 + s));
                CHECK(rel_diff(support(z, x), sg_test::brute_support(z, x)) <= 1e-12);
            }
        }
    }

    TEST_CASE("support is even, homogeneous and convex")
    {
        const std::vector<Body> bodies = {Body(random_zonotope(3, 6, 3, 0)), Body(Ball(3, 1.7)),
                                          Body(make_cross_polytope(3, 0.8)), Body(random_zonotope(4, 7, 3, 1))};
        for (const auto& b : bodies) {
            const int n = b.dim();
            const CounterRng rng(99, static_cast<std::uint64_t>(n));
            for (std::uint64_t s = 0; s < 20; ++s) {
                const Vector x = rng.on_sphere(2 * s, n);
                const Vector y = rng.on_sphere(2 * s + 1, n);
                const double t = 0.1 + 3.0 * rng.uniform(5000 + s);
                CHECK(rel_diff(support(b, -x), support(b, x)) <= 1e-12);
                CHECK(rel_diff(support(b, t * x), t * support(b, x)) <= 1e-12);
                const double mid = support(b, 0.5 * (x + y));
                CHECK(mid <= 0.5 * (support(b, x) + support(b, y)) + 1e-12);
            }
        }
    }

    TEST_CASE("surface measure of the cube")
    {
        const auto m = surface_measure(make_cube(3));
        CHECK(m.size() == 6);
        for (int k = 0; k < 3; ++k) {
            CHECK(atom_volume(m, Vector::Unit(3, k)) == doctest::Approx(4.0).epsilon(1e-14));
            CHECK(atom_volume(m, -Vector::Unit(3, k)) == doctest::Approx(4.0).epsilon(1e-14));
        }
    }

    TEST_CASE("surface measure of planar zonogons")
    {
        const auto square = surface_measure(Zonotope(2, {vec({1, 0}), vec({0, 1})}));
        CHECK(square.size() == 4);
        CHECK(atom_volume(square, vec({1, 0})) == doctest::Approx(2.0));
        CHECK(atom_volume(square, vec({0, -1})) == doctest::Approx(2.0));

        const auto hex = surface_measure(Zonotope(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}));
        CHECK(hex.size() == 6);
        CHECK(atom_volume(hex, vec({0, 1})) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(atom_volume(hex, vec({1, 0})) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(atom_volume(hex, vec({1, -1})) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
        CHECK(atom_volume(hex, vec({-1, 1})) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    }

    TEST_CASE("surface measure rejects balls and flat zonotopes")
    {
        CHECK(code_of([] { surface_measure(Body(Ball(3, 1.0))); }) == Errc::unsupported_measure);
        const Zonotope flat(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})});
        CHECK_FALSE(flat.is_full_rank());
        CHECK(code_of([&] { surface_measure(flat); }) == Errc::degenerate_body);
    }

    TEST_CASE("surface measure invariants on random zonotopes")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const int n = 2 + static_cast<int>(seed % 4);
            const std::size_t m = static_cast<std::size_t>(n) + seed % 5;
            const auto z = random_zonotope(n, m, 21, seed);
            const auto measure = surface_measure(z);
            CHECK(measure.size() <= 2 * binomial(m, static_cast<std::size_t>(n - 1)));
            CHECK(measure.size() % 2 == 0);

            Vector moment = Vector::Zero(n);
            for (const auto& atom : measure.atoms())
                moment += atom.a * atom.u.coords();
            CHECK(moment.norm() <= 1e-9 * measure.total());

            for (std::size_t k = 0; k < measure.pair_count(); ++k) {
                const auto& a = measure.atoms()[2 * k];
                const auto& b = measure.atoms()[2 * k + 1];
                CHECK(a.u.dot(b.u) == doctest::Approx(-1.0).epsilon(1e-15));
                CHECK(a.a == b.a);
            }
        }
    }

    TEST_CASE("surface measure is rotation equivariant")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const int n = 3 + static_cast<int>(seed % 2);
            const auto z = random_zonotope(n, 6, 5, seed);
            const Matrix q = random_orthogonal(n, seed + 100);
            const auto before = surface_measure(z);
            const auto after = surface_measure(z.transformed(q));
            REQUIRE(before.size() == after.size());
            for (const auto& atom : before.atoms()) {
                const Vector rotated = q * atom.u.coords();
                const double a = atom_volume(after, rotated);
                REQUIRE(a > 0.0);
                CHECK(rel_diff(a, atom.a) <= 1e-9);
            }
        }
    }

    TEST_CASE("non-generic zonotopes merge parallel facets")
    {
        // Two copies of e1 and e2 in 3D: the facets normal to e3 come from
        // four subsets and must merge into a single pair.
        const Zonotope z(3, {vec({1, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
        const auto m = surface_measure(z);
        CHECK(m.size() == 6);
        CHECK(atom_volume(m, vec({0, 0, 1})) == doctest::Approx(4.0 * 2.0));
        CHECK(atom_volume(m, vec({1, 0, 0})) == doctest::Approx(4.0 * 1.0));
    }

    TEST_CASE("canonicalize_measure examples")
    {
        const std::vector<RawAtom> scaled = {{vec({2, 0}), 1.0}, {vec({-2, 0}), 1.0}};
        const auto m = canonicalize_measure(2, scaled);
        REQUIRE(m.size() == 2);
        CHECK(m.atoms()[0].u[0] == 1.0);
        CHECK(m.atoms()[1].u[0] == -1.0);
        CHECK(m.atoms()[0].a == 1.0);

        const std::vector<RawAtom> lonely = {{vec({1, 0}), 1.0}};
        CHECK(code_of([&] { canonicalize_measure(2, lonely); }) == Errc::inconsistent_measure);

        const std::vector<RawAtom> merged = {{vec({1, 0}), 1.0}, {vec({1, 0}), 2.0}, {vec({-1, 0}), 3.0}};
        const auto mm = canonicalize_measure(2, merged);
        REQUIRE(mm.size() == 2);
        CHECK(mm.atoms()[0].a == 3.0);
        CHECK(mm.atoms()[1].a == 3.0);
    }

    TEST_CASE("canonicalize_measure edge cases")
    {
        const std::vector<RawAtom> zero_normal = {{vec({0, 0}), 1.0}};
        CHECK(code_of([&] { canonicalize_measure(2, zero_normal); }) == Errc::invalid_argument);

        const std::vector<RawAtom> unequal = {{vec({1, 0}), 1.0}, {vec({-1, 0}), 2.0}};
        CHECK(code_of([&] { canonicalize_measure(2, unequal); }) == Errc::inconsistent_measure);

        // Negligible atoms vanish instead of breaking symmetry.
        const std::vector<RawAtom> dust = {{vec({1, 0}), 1.0}, {vec({-1, 0}), 1.0}, {vec({0, 1}), 1e-14}};
        CHECK(canonicalize_measure(2, dust).size() == 2);

        // Nearly parallel normals within the merge threshold collapse.
        const std::vector<RawAtom> near = {
            {vec({1, 1e-7}), 1.0}, {vec({1, 0}), 1.0}, {vec({-1, 0}), 2.0}};
        CHECK(canonicalize_measure(2, near).size() == 2);
    }

    TEST_CASE("cross-polytope construction")
    {
        const auto square = make_cross_polytope(2, 1.0);
        CHECK(square.vertices().size() == 4);
        CHECK(volume(Body(square)).value == doctest::Approx(2.0).epsilon(1e-14));

        const auto octa = make_cross_polytope(3, 1.0);
        CHECK(octa.measure().size() == 8);
        for (const auto& atom : octa.measure().atoms())
            CHECK(atom.a == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
        for (double h : octa.offsets())
            CHECK(h == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
        CHECK(volume(Body(octa)).value == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK(volume(Body(make_cross_polytope(3, 2.0))).value == doctest::Approx(32.0 / 3.0).epsilon(1e-14));
        CHECK(code_of([] { make_cross_polytope(1, 1.0); }) == Errc::invalid_argument);
    }

    TEST_CASE("facet body validation")
    {
        const auto octa = make_cross_polytope(3, 1.0);
        std::vector<FacetData> facets;
        for (std::size_t i = 0; i < octa.measure().size(); ++i) {
            const auto& atom = octa.measure().atoms()[i];
            facets.push_back({atom.u, atom.a, octa.offsets()[i]});
        }
        auto verts = octa.vertices();
        CHECK_NOTHROW(FacetBody(3, verts, facets));

        auto bad_offsets = facets;
        bad_offsets[0].h *= 1.01;
        CHECK(code_of([&] { FacetBody(3, verts, bad_offsets); }) == Errc::inconsistent_measure);

        auto lopsided = verts;
        lopsided[0] *= 1.5;
        CHECK(code_of([&] { FacetBody(3, lopsided, facets); }) == Errc::inconsistent_measure);
    }

    TEST_CASE("generator cap")
    {
        std::vector<Vector> gens(21, vec({1.0, 0.5}));
        CHECK(code_of([&] { Zonotope(2, gens); }) == Errc::generator_cap_exceeded);
        CHECK_NOTHROW(Zonotope(2, gens, 32));
        CHECK(code_of([] { Ball(3, 0.0); }) == Errc::invalid_argument);
        CHECK(code_of([] { Zonotope(2, {vec({1, 0, 0})}); }) == Errc::dimension_mismatch);
    }
}

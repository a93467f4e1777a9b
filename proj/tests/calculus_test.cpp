#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shadowgauge/calculus.hpp"
#include "shadowgauge/constants.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/generate.hpp"
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

Zonotope hexagon_zonogon()
{
    return Zonotope(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})});
}

} // namespace

TEST_SUITE("calculus")
{
    TEST_CASE("volume examples")
    {
        const auto cube = volume(Body(make_cube(3)));
        CHECK(cube.value == doctest::Approx(8.0).epsilon(1e-15));
        CHECK(cube.method == VolumeMethod::determinant);
        CHECK_FALSE(cube.std_error.has_value());

        CHECK(volume(Body(hexagon_zonogon())).value == doctest::Approx(12.0).epsilon(1e-15));

        const auto ball = volume(Body(Ball(3, 1.0)));
        CHECK(ball.value == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-14));
        CHECK(ball.method == VolumeMethod::closed_form);

        CHECK(volume(Body(make_cross_polytope(3, 1.0))).method == VolumeMethod::pyramid);
    }

    TEST_CASE("volume of a flat zonotope is a degeneracy error")
    {
        const Zonotope flat(3, {vec({1, 0, 0}), vec({0, 1, 0})});
        try {
            volume(Body(flat));
            FAIL("expected degeneracy");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::degenerate_body);
        }
    }

    TEST_CASE("planar volume and perimeter match the convex hull of the corner points")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto z = random_zonotope(2, 2 + seed % 7, 31, seed);
            const auto pts = sg_test::planar_points(z);
            CHECK(rel_diff(volume(Body(z)).value, sg_test::hull_area(pts)) <= 1e-12);
            CHECK(rel_diff(surface_area(Body(z)), sg_test::hull_perimeter(pts)) <= 1e-12);
        }
    }

    TEST_CASE("volume_from_measure examples")
    {
        const auto cube = make_cube(3);
        const auto m = surface_measure(cube);
        const double v = volume_from_measure(m, [&](const Direction& u) { return support(cube, u.coords()); });
        CHECK(v == doctest::Approx(8.0).epsilon(1e-15));

        const auto hex = hexagon_zonogon();
        CHECK(volume_from_measure(surface_measure(hex), [&](const Direction& u) {
                  return support(hex, u.coords());
              }) == doctest::Approx(12.0).epsilon(1e-14));

        const Body octa = make_cross_polytope(3, 1.0);
        CHECK(volume_from_measure(surface_measure(octa), [&](const Direction& u) {
                  return support(octa, u.coords());
              }) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    }

    TEST_CASE("determinant and measure volumes agree")
    {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const int n = 2 + static_cast<int>(seed % 4);
            const auto z = random_zonotope(n, static_cast<std::size_t>(n) + seed % 6, 41, seed);
            const double det_path = volume(Body(z)).value;
            const double measure_path = volume_from_measure(
                surface_measure(z), [&](const Direction& u) { return support(z, u.coords()); });
            CHECK(rel_diff(det_path, measure_path) <= 1e-9);
        }
    }

    TEST_CASE("surface area examples")
    {
        CHECK(surface_area(Body(make_cube(3))) == doctest::Approx(24.0).epsilon(1e-15));
        CHECK(surface_area(Body(Ball(3, 1.0))) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-14));
        CHECK(surface_area(Body(hexagon_zonogon())) ==
              doctest::Approx(8.0 + 4.0 * std::sqrt(2.0)).epsilon(1e-14));
        // measure mass and direct subset sum agree
        const auto z = random_zonotope(4, 8, 3, 3);
        CHECK(rel_diff(surface_area(Body(z)), surface_measure(z).total()) <= 1e-12);
    }

    TEST_CASE("scaling laws")
    {
        const double t = 1.7;
        const double s = 0.6;
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const int n = 2 + static_cast<int>(seed % 3);
            const Body k = random_zonotope(n, 6, 51, seed);
            const Body l = random_zonotope(n, 5, 52, seed);
            CHECK(rel_diff(volume(k.scaled(t)).value, std::pow(t, n) * volume(k).value) <= 1e-12);
            CHECK(rel_diff(surface_area(k.scaled(t)), std::pow(t, n - 1) * surface_area(k)) <= 1e-12);
            CHECK(rel_diff(mixed_volume_v1(k.scaled(t), l.scaled(s)),
                           std::pow(t, n - 1) * s * mixed_volume_v1(k, l)) <= 1e-12);
        }
        const Body octa = make_cross_polytope(3, 1.0);
        CHECK(rel_diff(volume(octa.scaled(t)).value, std::pow(t, 3) * volume(octa).value) <= 1e-12);
        const Body ball = Ball(4, 1.0);
        CHECK(rel_diff(surface_area(ball.scaled(t)), std::pow(t, 3) * surface_area(ball)) <= 1e-12);
    }

    TEST_CASE("mixed volume examples")
    {
        const Body cube = make_cube(3);
        CHECK(mixed_volume_v1(cube, cube) == doctest::Approx(8.0).epsilon(1e-14));
        CHECK(mixed_volume_v1(cube, Ball(3, 1.0)) == doctest::Approx(8.0).epsilon(1e-14));
        const Body big = make_cube(3, 4.0);
        CHECK(mixed_volume_v1(cube, big) == doctest::Approx(32.0).epsilon(1e-14));
        CHECK(std::cbrt(volume(cube).value * volume(cube).value * volume(big).value) ==
              doctest::Approx(32.0).epsilon(1e-14));
        try {
            mixed_volume_v1(Ball(3, 1.0), cube);
            FAIL("ball has no discrete measure");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::unsupported_measure);
        }
    }

    TEST_CASE("V1(K, K) equals the volume")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const int n = 2 + static_cast<int>(seed % 4);
            const Body k = random_zonotope(n, static_cast<std::size_t>(n + 2), 61, seed);
            CHECK(rel_diff(mixed_volume_v1(k, k), volume(k).value) <= 1e-12);
        }
        const Body octa = make_cross_polytope(4, 1.3);
        CHECK(rel_diff(mixed_volume_v1(octa, octa), volume(octa).value) <= 1e-12);
    }

    TEST_CASE("first Minkowski inequality")
    {
        const Body cube = make_cube(3);
        CHECK(std::abs(minkowski_first_gap(cube, cube)) <= 1e-12 * 8.0);
        CHECK(std::abs(minkowski_first_gap(cube, make_cube(3, 4.0))) <= 1e-12 * 32.0);
        // 8 - 4 (4 pi / 3)^{1/3}, evaluated with mpmath
        CHECK(minkowski_first_gap(cube, Ball(3, 1.0)) == doctest::Approx(1.5520321839341214).epsilon(1e-12));

        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const int n = 2 + static_cast<int>(seed % 3);
            const Body k = random_zonotope(n, static_cast<std::size_t>(n + seed % 4), 71, seed);
            const Body l = seed % 5 == 0 ? Body(Ball(n, 0.7))
                                         : Body(random_zonotope(n, static_cast<std::size_t>(n + 1), 72, seed));
            CHECK(minkowski_first_gap(k, l) >= -1e-9 * mixed_volume_v1(k, l));
            CHECK(std::abs(minkowski_first_gap(k, k.scaled(2.5))) <= 1e-12 * mixed_volume_v1(k, k.scaled(2.5)));
        }
    }

    TEST_CASE("cauchy surface area")
    {
        const auto ball = cauchy_surface_area(Ball(3, 1.0), 1000, 1);
        CHECK(ball.value == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-12));
        CHECK(ball.std_error <= 1e-12);

        const auto cube = cauchy_surface_area(make_cube(3), 100000, 2);
        CHECK(std::abs(cube.value - 24.0) <= 3.0 * cube.std_error);

        const Body z = random_zonotope(3, 5, 81, 0);
        const auto base = cauchy_surface_area(z, 2000, 9);
        const auto scaled = cauchy_surface_area(z.scaled(2.0), 2000, 9);
        CHECK(rel_diff(scaled.value, 4.0 * base.value) <= 1e-12);

        CHECK_THROWS_AS(cauchy_surface_area(z, 999, 1), Error);
    }

    TEST_CASE("cauchy estimator covers the exact surface area on 99% of seeds")
    {
        int covered = 0;
        constexpr int runs = 200;
        for (int seed = 0; seed < runs; ++seed) {
            const int n = 2 + seed % 3;
            const Body z = random_zonotope(n, static_cast<std::size_t>(n + 2), 91, static_cast<std::uint64_t>(seed));
            const auto est = cauchy_surface_area(z, 2000, static_cast<std::uint64_t>(seed));
            if (std::abs(est.value - surface_area(z)) <= 3.0 * est.std_error)
                ++covered;
        }
        CHECK(covered >= 198);
    }

    TEST_CASE("zonotope sums")
    {
        const auto box = zonotope_sum(make_cube(3), make_cube(3));
        CHECK(volume(Body(box)).value == doctest::Approx(64.0).epsilon(1e-14));
        CHECK(support(box, vec({1, 0, 0})) == doctest::Approx(2.0));

        const auto z = random_zonotope(3, 5, 101, 0);
        const Zonotope empty(Matrix(3, 0));
        const auto same = zonotope_sum(z, empty);
        CHECK(same.generators() == z.generators());

        const auto square = zonotope_sum(Zonotope(2, {vec({1, 0})}), Zonotope(2, {vec({0, 1})}));
        CHECK(volume(Body(square)).value == doctest::Approx(4.0));
        CHECK(support(square, vec({1, 1})) == doctest::Approx(2.0));

        const auto other = random_zonotope(3, 4, 101, 1);
        const auto sum = zonotope_sum(z, other);
        const CounterRng rng(5);
        for (std::uint64_t i = 0; i < 20; ++i) {
            const Vector x = rng.on_sphere(i, 3);
            CHECK(rel_diff(support(sum, x), support(z, x) + support(other, x)) <= 1e-15);
        }

        CHECK_THROWS_AS(zonotope_sum(random_zonotope(3, 12, 1, 0), random_zonotope(3, 12, 1, 1)), Error);
        CHECK_THROWS_AS(zonotope_sum(make_cube(2), make_cube(3)), Error);
    }

    TEST_CASE("Steiner polynomial in the plane")
    {
        const auto square = make_cube(2);
        CHECK(steiner_2d(square, 1.0) == doctest::Approx(12.0 + std::numbers::pi).epsilon(1e-15));
        CHECK(steiner_2d(hexagon_zonogon(), 0.0) == doctest::Approx(12.0).epsilon(1e-15));

        const double perimeter = surface_area(Body(hexagon_zonogon()));
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const double fd = (steiner_2d(hexagon_zonogon(), eps) - 12.0) / eps;
            CHECK(std::abs(fd - perimeter - std::numbers::pi * eps) <= 1e-10);
        }
        CHECK_THROWS_AS(steiner_2d(make_cube(3), 1.0), Error);
        CHECK_THROWS_AS(steiner_2d(Zonotope(2, {vec({1, 1})}), 1.0), Error);
    }

    TEST_CASE("rotation invariance of calculus scalars")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const int n = 3 + static_cast<int>(seed % 2);
            const Body k = random_zonotope(n, 6, 111, seed);
            const Body l = random_zonotope(n, 5, 112, seed);
            const Matrix q = random_orthogonal(n, seed);
            const Body qk = k.transformed(q);
            const Body ql = l.transformed(q);
            CHECK(rel_diff(volume(qk).value, volume(k).value) <= 1e-9);
            CHECK(rel_diff(surface_area(qk), surface_area(k)) <= 1e-9);
            CHECK(rel_diff(mixed_volume_v1(qk, ql), mixed_volume_v1(k, l)) <= 1e-9);
        }
        const Body octa = make_cross_polytope(3, 1.0);
        const Matrix q = random_orthogonal(3, 7);
        CHECK(rel_diff(volume(octa.transformed(q)).value, 4.0 / 3.0) <= 1e-9);
    }
}

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "shadowgauge/constants.hpp"
#include "shadowgauge/error.hpp"
#include "shadowgauge/shadows.hpp"

namespace shadowgauge {

std::int64_t default_coarse_samples(int n)
{
    constexpr std::int64_t base = 1 << 13;
    constexpr std::int64_t ceiling = 1 << 18;
    if (n <= 4)
        return base;
    return std::min(ceiling, base << std::min(n - 4, 5));
}

namespace {

// Additive recurrence with the generalized golden ratio (root of
// x^{d+1} = x + 1); consecutive points fill [0,1)^d evenly.
std::vector<double> recurrence_steps(int d)
{
    double phi = 2.0;
    for (int it = 0; it < 64; ++it)
        phi = std::pow(1.0 + phi, 1.0 / (d + 1));
    std::vector<double> alpha(static_cast<std::size_t>(d));
    double p = 1.0;
    for (int i = 0; i < d; ++i) {
        p /= phi;
        alpha[static_cast<std::size_t>(i)] = p;
    }
    return alpha;
}

// Coarse sample j mapped to the upper hemisphere (last coordinate >= 0)
// through the Gaussian quantile.
Vector coarse_point(std::int64_t j, const std::vector<double>& alpha)
{
    static const boost::math::normal_distribution<double> gauss;
    const auto n = static_cast<Eigen::Index>(alpha.size());
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double t = 0.5 + static_cast<double>(j + 1) * alpha[static_cast<std::size_t>(i)];
        t -= std::floor(t);
        t = std::clamp(t, 1e-12, 1.0 - 1e-12);
        g[i] = boost::math::quantile(gauss, t);
    }
    if (g[n - 1] < 0.0)
        g = -g;
    return g;
}

class Evaluator {
public:
    explicit Evaluator(const std::function<double(const Direction&)>& f) : f_(f) {}

    double operator()(const Direction& xi)
    {
        const double v = f_(xi);
        ++count_;
        if (!std::isfinite(v))
            throw Error(Errc::evaluation_error,
                        "objective returned a non-finite value (" + std::to_string(v) + ")");
        return v;
    }

    std::int64_t count() const noexcept { return count_; }

private:
    const std::function<double(const Direction&)>& f_;
    std::int64_t count_ = 0;
};

struct LocalResult {
    Direction x;
    double value;
    double step;
};

// Pattern search on the sphere: poll x + s d over the tangent axes and
// their pairwise diagonals, renormalize, take the best strict improvement;
// halve s when nothing improves.
LocalResult pattern_search(Evaluator& eval, Direction x, double value, double step, double shrink_tol)
{
    const int n = x.dim();
    constexpr int max_polls = 20000;
    for (int poll = 0; poll < max_polls && step >= shrink_tol; ++poll) {
        const Matrix basis = orthobasis(x);
        std::vector<Vector> dirs;
        for (int i = 0; i < n - 1; ++i) {
            dirs.push_back(basis.col(i));
            dirs.push_back(-basis.col(i));
            for (int j = i + 1; j < n - 1; ++j) {
                const Vector a = (basis.col(i) + basis.col(j)) * (std::numbers::sqrt2 / 2.0);
                const Vector b = (basis.col(i) - basis.col(j)) * (std::numbers::sqrt2 / 2.0);
                dirs.push_back(a);
                dirs.push_back(-a);
                dirs.push_back(b);
                dirs.push_back(-b);
            }
        }
        double best = value;
        std::ptrdiff_t best_idx = -1;
        std::vector<Direction> trials;
        trials.reserve(dirs.size());
        for (const auto& d : dirs) {
            trials.push_back(Direction::normalized(x.coords() + step * d));
            const double v = eval(trials.back());
            if (v < best) {
                best = v;
                best_idx = static_cast<std::ptrdiff_t>(trials.size() - 1);
            }
        }
        if (best_idx >= 0) {
            x = trials[static_cast<std::size_t>(best_idx)];
            value = best;
        } else {
            step *= 0.5;
        }
    }
    return {x, value, step};
}

} // namespace

SphereMinResult min_over_sphere(const std::function<double(const Direction&)>& f, int n,
                                const SphereSearchConfig& cfg)
{
    if (n < 2)
        throw Error(Errc::invalid_argument, "min_over_sphere needs n >= 2");
    if (cfg.coarse_samples < 0 || cfg.restarts < 1 || !(cfg.shrink_tol > 0.0))
        throw Error(Errc::invalid_argument, "min_over_sphere: configuration must be positive");

    const std::int64_t samples = cfg.coarse_samples > 0 ? cfg.coarse_samples : default_coarse_samples(n);
    Evaluator eval(f);

    std::vector<Direction> points;
    points.reserve(static_cast<std::size_t>(samples + n));
    for (int k = 0; k < n; ++k)
        points.push_back(Direction::axis(n, k));
    const auto alpha = recurrence_steps(n);
    for (std::int64_t j = 0; j < samples; ++j)
        points.push_back(Direction::normalized(coarse_point(j, alpha)));

    std::vector<double> values(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        values[i] = eval(points[i]);

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });

    // Typical spacing of the coarse sample on the hemisphere.
    const double hemisphere = 0.5 * n * unit_ball_volume(n);
    const double spacing = std::pow(hemisphere / static_cast<double>(samples), 1.0 / (n - 1));
    const double separation = std::cos(std::min(3.0 * spacing, 0.5));

    std::vector<std::size_t> seeds;
    for (const std::size_t idx : order) {
        if (static_cast<int>(seeds.size()) >= cfg.restarts)
            break;
        const bool distinct = std::none_of(seeds.begin(), seeds.end(), [&](std::size_t s) {
            return std::abs(points[s].dot(points[idx])) > separation;
        });
        if (distinct)
            seeds.push_back(idx);
    }

    const double initial_step = std::clamp(2.0 * spacing, 1e-3, 0.25);
    LocalResult best{points[order.front()], values[order.front()], initial_step};
    for (const std::size_t s : seeds) {
        LocalResult r = pattern_search(eval, points[s], values[s], initial_step, cfg.shrink_tol);
        if (r.value < best.value)
            best = std::move(r);
    }
    return SphereMinResult{best.x, best.value, eval.count(), best.step};
}

} // namespace shadowgauge

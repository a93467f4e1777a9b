#include "shadowgauge/random.hpp"

#include <cmath>
#include <numbers>

namespace shadowgauge {

double CounterRng::normal(std::uint64_t index) const noexcept
{
    const double u1 = uniform_open(2 * index);
    const double u2 = uniform(2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXd CounterRng::on_sphere(std::uint64_t index, int dim) const
{
    Eigen::VectorXd v(dim);
    const auto base = index * static_cast<std::uint64_t>(dim);
    for (int k = 0; k < dim; ++k)
        v[k] = normal(base + static_cast<std::uint64_t>(k));
    const double norm = v.norm();
    if (norm == 0.0) {
        v.setZero();
        v[0] = 1.0;
        return v;
    }
    return v / norm;
}

} // namespace shadowgauge

#include "shadowgauge/constants.hpp"

#include <cmath>
#include <numbers>

#include "shadowgauge/error.hpp"

namespace shadowgauge {

double unit_ball_volume(int n)
{
    if (n < 1)
        throw Error(Errc::invalid_argument, "unit_ball_volume: n must be >= 1");
    const double half = 0.5 * n;
    return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
}

double cn(int n)
{
    if (n < 2)
        throw Error(Errc::invalid_argument, "cn: n must be >= 2");
    // log form keeps large n stable
    const double half = 0.5 * n;
    const double log_bn = half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
    const double log_bn1 = (half - 0.5) * std::log(std::numbers::pi) - std::lgamma(half + 0.5);
    return std::exp(log_bn * (n - 1) / n - log_bn1);
}

Constants constants(int n)
{
    return Constants{n, unit_ball_volume(n), cn(n)};
}

} // namespace shadowgauge

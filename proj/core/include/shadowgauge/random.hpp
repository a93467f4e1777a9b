#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace shadowgauge {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, index), so parallel ranges reproduce serial output.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL)))
    {
    }

    std::uint64_t bits(std::uint64_t index) const noexcept
    {
        return mix(key_ + index * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, 1).
    double uniform(std::uint64_t index) const noexcept
    {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1].
    double uniform_open(std::uint64_t index) const noexcept
    {
        return (static_cast<double>(bits(index) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal (Box-Muller on two counters).
    double normal(std::uint64_t index) const noexcept;

    /// Uniform random point of the unit sphere in R^dim; consumes the
    /// counter block [index*dim, index*dim + dim).
    Eigen::VectorXd on_sphere(std::uint64_t index, int dim) const;

private:
    static std::uint64_t mix(std::uint64_t z) noexcept
    {
        // splitmix64 finalizer
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

} // namespace shadowgauge

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace shadowgauge {

/// Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Binomial coefficient C(m, k) as an unsigned 64-bit integer.
std::uint64_t binomial(std::size_t m, std::size_t k) noexcept;

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of {0..m-1}
/// in lexicographic order. k == 0 visits the empty subset once.
template <typename Fn>
void for_each_combination(std::size_t m, std::size_t k, Fn&& fn)
{
    if (k > m)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        if (k == 0)
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace shadowgauge

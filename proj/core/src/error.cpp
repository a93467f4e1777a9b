#include "shadowgauge/error.hpp"

#include "shadowgauge/numeric.hpp"

namespace shadowgauge {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::degenerate_body: return "degenerate_body";
    case Errc::unsupported_measure: return "unsupported_measure";
    case Errc::inconsistent_measure: return "inconsistent_measure";
    case Errc::generator_cap_exceeded: return "generator_cap_exceeded";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::evaluation_error: return "evaluation_error";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

std::uint64_t binomial(std::size_t m, std::size_t k) noexcept
{
    if (k > m)
        return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (m - k + i) / i;
    return r;
}

} // namespace shadowgauge

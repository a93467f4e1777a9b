#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shadowgauge {

enum class Errc {
    dimension_mismatch,
    degenerate_body,
    unsupported_measure,
    inconsistent_measure,
    generator_cap_exceeded,
    invalid_argument,
    evaluation_error,
    parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to verdicts or exit codes.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace shadowgauge

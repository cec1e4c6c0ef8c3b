#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlc {

enum class ErrorKind {
    ZeroTotal,
    InvalidScheme,
    BadMagic,
    BadVersion,
    TruncatedPayload,
    InvalidCode,
    InvalidMapping,
    TrailingGarbage,
    MissingCode,
    CodeTooLong,
    Io,
    VerificationFailed,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a category so callers (and the
// CLI exit-code map) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace qlc

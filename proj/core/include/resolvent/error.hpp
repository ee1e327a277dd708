#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resolvent {

enum class ErrorKind {
    SelfLoop,
    VertexOutOfRange,
    CapacityExceeded,
    Disconnected,
    EmptySet,
    MalformedHeader,
    TruncatedPayload,
    TrailingBits,
    UnsupportedSize,
    ParseError,
    BadParams,
    ConnectivityRetryExhausted,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// it onto exit codes without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace resolvent

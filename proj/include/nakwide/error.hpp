#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nakwide {

enum class ErrorKind {
    NonIntegralRatio,
    ParityViolation,
    RangeError,
    PreconditionViolation,
    DomainError,
    NoExtension,
    RelationViolation,
    ResolutionOverflow,
    EnumerationBoundExceeded,
    NotPeriodic,
    NotMember,
    InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` names the violated contract.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace nakwide

#include "nakwide/error.hpp"

namespace nakwide {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonIntegralRatio: return "NonIntegralRatio";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::ResolutionOverflow: return "ResolutionOverflow";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

} // namespace nakwide

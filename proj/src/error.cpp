#include "wittlab/error.hpp"

namespace wittlab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::CompositeP: return "CompositeP";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
        case ErrorKind::NotInWindow: return "NotInWindow";
        case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotNormal: return "NotNormal";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::NotHomomorphic: return "NotHomomorphic";
        case ErrorKind::ActionNotHomomorphic: return "ActionNotHomomorphic";
        case ErrorKind::NotSurjectiveOnGp: return "NotSurjectiveOnGp";
        case ErrorKind::NotMinimalNormal: return "NotMinimalNormal";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
        case ErrorKind::WildRamification: return "WildRamification";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace wittlab

#pragma once

#include <stdexcept>
#include <string>

namespace ydlab {

// Error taxonomy shared by every module.  Input-shaped problems (bad files,
// bad dimensions, unknown names) map to CLI exit code 2; failed mathematical
// checks are *not* errors — they are reported as failing checks in a
// VerificationReport and map to exit code 1.
enum class ErrorKind {
    DimensionMismatch,
    GroupMismatch,
    GradingMismatch,
    MalformedInput,
    NotInvertible,
    ClosureTooLarge,
    PreconditionFailed,
    IntegrityError,
    EmptyHom,
    UnknownCommand,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::GradingMismatch: return "GradingMismatch";
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::IntegrityError: return "IntegrityError";
        case ErrorKind::EmptyHom: return "EmptyHom";
        case ErrorKind::UnknownCommand: return "UnknownCommand";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ydlab

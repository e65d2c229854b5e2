#pragma once

#include <stdexcept>
#include <string>

namespace polyratio {

enum class ErrorKind {
    InvalidArgument,
    DegenerateGeometry,
    GeneralPositionViolation,
    ToleranceAmbiguity,
    NotCoprime,
    NotBasicSetup,
    EpsilonTooLarge,
    NotSimpleChain,
    MissingDataFile,
    PrecisionExhausted,
    InitialEvaluationFailed,
};

const char* to_string(ErrorKind kind);

class GeomError : public std::runtime_error {
public:
    GeomError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message)
{
    throw GeomError(kind, message);
}

} // namespace polyratio

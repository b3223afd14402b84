#pragma once

#include <stdexcept>
#include <string>

namespace mfcat {

enum class ErrorKind {
    InvalidOrder,
    DivByZero,
    OrderMismatch,
    ShapeMismatch,
    NotAFactorisation,
    VariableMismatch,
    ParityMismatch,
    PreconditionViolated,
    UnstableDimension,
    NotProportional,
    AmbiguousDimension,
    InvalidLabel,
    ChargeMismatch,
    NotNegligible,
    Cancelled,
    QuantumZero,
    AssociativityViolation,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mfcat

#pragma once

#include <stdexcept>
#include <string>

namespace monogamy {

// Input failed a documented precondition (normalization, parameter domain,
// Hermiticity, PSD-ness). The CLI maps it to exit status 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Operand shapes do not match.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A result broke an invariant that holds as a theorem (e.g. a negative
// monogamy gap). Signals a numerical or implementation bug; exit status 3.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace monogamy

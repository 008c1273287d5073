#pragma once

#include <stdexcept>
#include <string>

#include "qnogo/types.hpp"

namespace qnogo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct NonRealExpectation : Error {
    using Error::Error;
};

struct NonOrthonormalBasis : Error {
    using Error::Error;
};

/// A probed value failed |v^2 - v| <= tol; carries the witness pair.
struct DichotomyViolation : Error {
    DichotomyViolation(std::string msg, Matrix projector, double value)
        : Error(std::move(msg)), projector(std::move(projector)), value(value) {}
    Matrix projector;
    double value;
};

struct RelationNotSatisfiedByOperators : Error {
    using Error::Error;
};

struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct InvalidDensity : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qnogo

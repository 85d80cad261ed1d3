#pragma once

#include <stdexcept>
#include <string>

namespace qwhitney {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of the operation
/// (negative q-bracket argument, negative node, invalid preset data, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Division by the zero polynomial or by zero.
struct DivisionByZero : Error {
    using Error::Error;
};

/// Index outside the valid range of a sequence or triangle.
struct IndexError : Error {
    using Error::Error;
};

/// A builder was asked for more rows than the parameter set can supply.
struct CapacityError : Error {
    using Error::Error;
};

/// Two nodes coincide where an explicit formula requires them distinct.
struct DuplicateNodes : Error {
    DuplicateNodes(int j_, int i_)
        : Error("duplicate nodes at indices " + std::to_string(j_) + " and " +
                std::to_string(i_)),
          j(j_), i(i_) {}
    int j;
    int i;
};

/// A rational computation that must reduce to a polynomial did not.
/// Indicates an arithmetic bug, never an expected condition.
struct NonPolynomialResult : Error {
    using Error::Error;
};

/// A rational computation that must reduce to an integer did not.
struct NonIntegerResult : Error {
    using Error::Error;
};

/// Matrix inversion requires a unit diagonal.
struct NotUnitriangular : Error {
    using Error::Error;
};

/// Sequence/matrix sizes do not match.
struct DimensionError : Error {
    using Error::Error;
};

/// Unrecognized named special case.
struct UnknownPreset : Error {
    using Error::Error;
};

}  // namespace qwhitney

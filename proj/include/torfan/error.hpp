#pragma once

#include <stdexcept>
#include <string>

namespace torfan {

/// Base of every domain error raised by the library. The CLI maps these to exit code 1
/// and prints what() verbatim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid instance document; message starts with the offending field path.
class InstanceError : public Error {
public:
    InstanceError(const std::string& path, const std::string& what) : Error(path + ": " + what) {}
};

/// An operation was called outside its precondition (empty operand, character off the cone, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Lattice-point enumeration or a bounded search ran past its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A cross-check between two independent computations disagreed.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace torfan

#pragma once

#include <stdexcept>
#include <string>

namespace dynrel {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument is outside the mathematical domain of an operation
/// (negative time, probability outside [0,1], uniform draw outside (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A request exceeds a hard capacity guard (e.g. inclusion-exclusion blowup).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An expression references events that do not exist in the model, or uses
/// an event in a structurally invalid position (a spare outside a wsp slot).
class ModelError : public Error {
public:
    using Error::Error;
};

/// The model is well formed but the requested analytic route has no formula
/// for its structure. Callers may fall back to Monte Carlo.
class UnsupportedStructureError : public Error {
public:
    using Error::Error;
};

/// A conversion was asked to translate an operator with no equivalence rule.
class NoEquivalenceError : public UnsupportedStructureError {
public:
    using UnsupportedStructureError::UnsupportedStructureError;
};

/// Numerical routine failed to meet its tolerance. Carries the best estimate
/// and the error bound actually achieved.
class NumericError : public Error {
public:
    NumericError(const std::string& what, double best_estimate, double achieved_error)
        : Error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

    double best_estimate() const { return best_estimate_; }
    double achieved_error() const { return achieved_error_; }

private:
    double best_estimate_;
    double achieved_error_;
};

}  // namespace dynrel

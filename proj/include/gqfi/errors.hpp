#pragma once

#include <stdexcept>
#include <string>

namespace gqfi {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function (negative time, ω ≤ 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A phase-space state or density matrix violates a physical invariant.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Non-finite values or a singular system encountered during evaluation.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Purity term of the Gaussian QFI requested exactly at P = 1 with ∂P ≠ 0.
class PureStateBoundaryError : public Error {
public:
    using Error::Error;
};

/// Closed form requested outside the regime it was derived for.
class UnsupportedRegimeError : public Error {
public:
    using Error::Error;
};

/// The damping rate vanishes, so there is no stationary state.
class NoSteadyStateError : public Error {
public:
    using Error::Error;
};

/// Fock-space truncation lost more population than allowed.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, int suggested_dim)
        : Error(what), suggested_dim_(suggested_dim) {}

    int suggested_dim() const noexcept { return suggested_dim_; }

private:
    int suggested_dim_;
};

/// RK4 step violates the stability precondition.
class StepSizeError : public Error {
public:
    using Error::Error;
};

}  // namespace gqfi

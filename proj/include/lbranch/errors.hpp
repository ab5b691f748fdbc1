#pragma once

#include <stdexcept>
#include <string>

namespace lbranch {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unknown (family, rank) pair for the built-in Cartan table.
class InvalidTypeError : public Error {
public:
  using Error::Error;
};

/// A user-supplied Cartan matrix or symmetrizer fails validation.
class InvalidCartanError : public Error {
public:
  using Error::Error;
};

/// A caller violated an operation's precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

class NotDominantError : public DomainError {
public:
  using DomainError::DomainError;
};

class NotInSublatticeError : public DomainError {
public:
  using DomainError::DomainError;
};

class NotWInvariantError : public DomainError {
public:
  using DomainError::DomainError;
};

class EllNotMultipleError : public DomainError {
public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
public:
  using DomainError::DomainError;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// A proven positivity statement failed. Never expected; indicates a bug.
class TheoremViolation : public Error {
public:
  using Error::Error;
};

/// Two computations that must agree did not.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace lbranch

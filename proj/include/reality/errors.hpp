#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reality {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// An enumeration or sweep would exceed its configured element/work budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// A permutation generator is not a bijection, or a generator is otherwise
// malformed for its group kind.
class InvalidGenerator : public Error {
public:
  using Error::Error;
};

// A matrix generator is not invertible over its field.
class SingularGenerator : public Error {
public:
  using Error::Error;
};

// A multiplication table fails the group axioms; the message names the
// failing row/triple.
class NotAGroup : public Error {
public:
  using Error::Error;
};

// A proposed action does not extend to a homomorphism into Aut(A).
class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

// Automorphism enumeration is only supported for tiny groups.
class TooLarge : public Error {
public:
  using Error::Error;
};

// Requested field size is not a prime power (or exceeds the field budget).
class NotPrimePower : public Error {
public:
  using Error::Error;
};

// A family spec names an unsupported family or an out-of-budget parameter.
class UnknownFamily : public Error {
public:
  using Error::Error;
};

// No admissible prime was found below the search bound.
class SearchExhausted : public Error {
public:
  using Error::Error;
};

// Group spec text could not be parsed; `position` is a 0-based offset into
// the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what_arg, std::size_t pos)
      : Error(what_arg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Internal invariant violations. These indicate a bug in the library, never
// a data condition, and map to a distinct process exit code in the CLI.
class InternalError : public Error {
public:
  using Error::Error;
};

// Eigenspace splitting failed to separate all characters.
class SplitFailure : public InternalError {
public:
  using InternalError::InternalError;
};

// No degree in 1..floor(sqrt(|G|)) matches the recovered residue.
class DegreeNotFound : public InternalError {
public:
  using InternalError::InternalError;
};

// A Frobenius-Schur residue matched none of -|G|, 0, +|G| mod p.
class IndicatorAmbiguous : public InternalError {
public:
  using InternalError::InternalError;
};

}  // namespace reality

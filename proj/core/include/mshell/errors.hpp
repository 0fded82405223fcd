#ifndef MSHELL_ERRORS_HPP
#define MSHELL_ERRORS_HPP

#include <stdexcept>

namespace mshell {

/// Arity mismatch between monomials, or between a monomial and its ambient
/// ideal.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (e.g. lattice path strings).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition was violated by otherwise well-formed input.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A configured size cap or enumeration bound was exceeded.
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// An internal invariant failed. Signals a bug in this library, not bad
/// input; in particular the recursive shelling construction throws this if
/// one of its sub-ideals stops being a discrete polymatroid.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace mshell

#endif  // MSHELL_ERRORS_HPP

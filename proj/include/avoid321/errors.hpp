#pragma once

#include <stdexcept>
#include <string>

namespace avoid321 {

/// Base class for every domain error raised by the library. The CLI maps
/// all of these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of a statistic (e.g. lind of the empty permutation).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotBallot : public Error {
 public:
  using Error::Error;
};

class ThirdRowRequired : public Error {
 public:
  using Error::Error;
};

class MalformedPair : public Error {
 public:
  using Error::Error;
};

class NotInDomain : public Error {
 public:
  using Error::Error;
};

class Not321Avoiding : public Error {
 public:
  using Error::Error;
};

class NotAMatchedPair : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

/// Raised when two computations that must agree do not. Indicates a bug,
/// never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace avoid321

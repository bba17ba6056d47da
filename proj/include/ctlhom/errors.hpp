#pragma once

#include <stdexcept>
#include <string>

namespace ctlhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (index out of range,
/// mismatched endpoints, element not in the carrier).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The value cannot be expressed in the finite representation used here.
class UnsupportedRepresentation : public Error {
 public:
  using Error::Error;
};

/// An exhaustion, gluing or quotient presentation is malformed.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input parsed but violates a structural law (simplicial identities).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A map is not controlled where controlledness is required.
class ControlledError : public Error {
 public:
  using Error::Error;
};

/// Unknown corpus descriptor or parameter out of range.
class DescriptorError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctlhom

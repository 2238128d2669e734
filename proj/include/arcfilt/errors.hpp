#ifndef ARCFILT_ERRORS_HPP
#define ARCFILT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arcfilt {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A parameter is outside its documented domain (bad ADE index, negative
// order, mismatched dimensions, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (graph files, generator lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but outside the supported theory, e.g. asking for
// valuation-ideal codimensions on a non-rational singularity.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

// A configured resource gate was hit (variable count, box size, table size).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Box stabilization was not reached below the configured ceiling; the
// requested comparison is neither confirmed nor refuted.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcfilt

#endif  // ARCFILT_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace eqcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplicity or weight left the range of std::int64_t.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed bundle literal, JSON document, or range string.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A cut decomposition whose reduced-space fiber weights are not zero.
class MalformedCut : public Error {
 public:
  using Error::Error;
};

/// Exact Laurent division left a nonzero remainder.
class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

}  // namespace eqcut

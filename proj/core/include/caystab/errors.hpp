#pragma once

#include <stdexcept>
#include <string>

namespace caystab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad constructor parameter, foreign element index, out-of-range vertex.
class InvalidParameterError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (group specs, connection sets, graph6, JSON).
class ParseError : public Error {
public:
  using Error::Error;
};

/// An operation was invoked outside its stated preconditions.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The operation is defined only for a restricted input class
/// (e.g. graph6 output for simple graphs).
class UnsupportedFeatureError : public Error {
public:
  using Error::Error;
};

} // namespace caystab

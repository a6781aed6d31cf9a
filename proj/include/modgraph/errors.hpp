#pragma once

#include <stdexcept>
#include <string>

namespace modgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad spec objects, failed axiom checks, violated
/// preconditions (non-prime characteristic, non-simple module, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace modgraph

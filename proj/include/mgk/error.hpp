#pragma once

#include <stdexcept>
#include <string>

namespace mgk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands from incompatible backends or domains.
struct BackendMismatch : Error {
  using Error::Error;
};

/// A stated precondition does not hold (bad placement, identity generator,
/// negative-sign theta, non-injective embedding, ...).
struct Precondition : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded (ball size, closure size, degree).
struct ResourceExhausted : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mgk

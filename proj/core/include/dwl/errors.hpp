#pragma once

#include <stdexcept>
#include <string>

namespace dwl {

// Quadrature produced a non-finite value, or a resolution self-check failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition that is not a plain argument
// range (e.g. a mixed state handed to a pure-state formula).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dwl

#pragma once

#include <stdexcept>
#include <string>

namespace u2mp {

/// Ill-posed input: unparseable documents, polygons outside the chamber.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ChamberError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed; a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace u2mp

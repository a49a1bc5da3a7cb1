#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A half-root whose angle is a multiple of pi; the q-bracket denominator vanishes.
class DegenerateRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deformation parameter outside the supported regimes (real q > 0, or a root of unity).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qosc

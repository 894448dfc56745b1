#pragma once

#include <stdexcept>
#include <string>

namespace scarf2 {

/// A gamma-function pole (or an expression whose limit is infinite).
class PoleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An integral that does not converge for the given parameters.
class DivergenceError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Parameters outside the regime an operation is defined for,
/// or a state index outside the normalizable range.
class RegimeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A non-finite sample or other runtime failure inside a numerical routine.
class EvaluationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace scarf2

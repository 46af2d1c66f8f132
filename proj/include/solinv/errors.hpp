#pragma once

#include <stdexcept>
#include <string>

namespace solinv {

// Invalid run/condition parameters (bad constants, malformed config).
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically invalid input: mismatched base points, degenerate plane,
// initial state outside the ODE's domain.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// theta' is singular at the requested angle. `limit` carries the limiting
// value of theta' as the singular locus is approached (+/-inf, or 0 when the
// singularity is removable).
class SingularAngle : public std::domain_error {
public:
  SingularAngle(const std::string& what, double limit_value)
      : std::domain_error(what), limit(limit_value) {}
  double limit;
};

}  // namespace solinv

#pragma once

#include <stdexcept>
#include <string>

namespace polyzero {

// Invalid experiment or model configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A certificate or assertion that must hold did not (CLI exit code 3).
class CertificateFailure : public std::runtime_error {
 public:
  explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure budget exceeded or a value left the representable range
// (CLI exit code 4).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

}  // namespace polyzero

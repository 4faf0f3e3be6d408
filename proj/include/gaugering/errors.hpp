#pragma once

#include <stdexcept>
#include <string>

namespace gaugering {

/// Thrown when a dense eigensolver fails to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A projected single-particle state whose norm is too small to renormalize.
class NormCollapseError : public std::runtime_error {
 public:
  NormCollapseError(const std::string& what, double norm)
      : std::runtime_error(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

}  // namespace gaugering

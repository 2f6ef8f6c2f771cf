#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

// Thrown for contract violations: bad arguments, rejected parameter ranges,
// malformed files. CLI maps these to exit code 1 (usage) where appropriate.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numerical procedure fails to converge or a result fails an
// internal quality check (non-convergent extrapolation, ill-conditioned fit).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace fracwave

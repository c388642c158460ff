#pragma once

#include <stdexcept>
#include <string>

namespace derivpoly {

// A closed form that must produce an integer left a nonzero denominator.
class NonIntegerResult : public std::logic_error {
 public:
  explicit NonIntegerResult(const std::string& what) : std::logic_error(what) {}
};

// A construction routed through Gaussian rationals left an imaginary part.
class ComplexResidue : public std::logic_error {
 public:
  explicit ComplexResidue(const std::string& what) : std::logic_error(what) {}
};

class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace derivpoly

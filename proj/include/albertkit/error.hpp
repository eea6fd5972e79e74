#pragma once

#include <stdexcept>
#include <string>

namespace albertkit {

// Precondition violated by an argument (zero where a unit is required, mismatched
// algebra parameters, wrong rank, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The request is well formed but outside what this library decides.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An L-factor was evaluated at a zero of its characteristic polynomial.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, int order)
      : std::runtime_error(what), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

}  // namespace albertkit

#ifndef FPSEL_ERRORS_HPP
#define FPSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpsel {

// Precondition on mathematical input violated (bad prime, argument out of
// range, parameter regime not satisfied).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Structural mismatch between operands (different fields, different rings,
// different variable counts).
struct TypeError : std::invalid_argument {
  explicit TypeError(const std::string& what) : std::invalid_argument(what) {}
};

// A denominator that the formula needs to invert is 0 mod p.
struct SingularError : std::runtime_error {
  explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or expansion exceeds the configured budget.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fpsel

#endif  // FPSEL_ERRORS_HPP

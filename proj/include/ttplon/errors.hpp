#pragma once

/// @file errors.hpp
/// @brief Exception types raised by the ttplon library.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ttplon {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A picking plan whose total weight exceeds the knapsack capacity.
class InfeasibleError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Exhaustive enumeration refused because the solution space is too large.
class SizeGuardError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Instance with no feasible non-empty picking plan (renting rate undefined).
class DegenerateInstanceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance file.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace ttplon

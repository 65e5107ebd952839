#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace holdercurve {

// Malformed germ text: bad JSON, missing fields, wrong value types.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant (zero coefficient,
// unordered exponents, duplicate branch, bad option value, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between elements of different cyclotomic fields.
class FieldOrderMismatch : public std::invalid_argument {
 public:
  FieldOrderMismatch(int lhs, int rhs);
  int lhs_order() const noexcept { return lhs_; }
  int rhs_order() const noexcept { return rhs_; }

 private:
  int lhs_;
  int rhs_;
};

// The user-supplied truncation is too short to decide a question.
//
// Carries the best lower bound established (in units of ord_x) and, when
// known, the pair of branch indices whose comparison was inconclusive.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what,
                           std::optional<std::string> lower_bound = std::nullopt,
                           std::optional<std::pair<std::size_t, std::size_t>>
                               branch_pair = std::nullopt)
      : std::runtime_error(what),
        lower_bound_(std::move(lower_bound)),
        branch_pair_(branch_pair) {}

  // Lower bound serialized as "p/q".
  const std::optional<std::string>& lower_bound() const noexcept {
    return lower_bound_;
  }
  const std::optional<std::pair<std::size_t, std::size_t>>& branch_pair()
      const noexcept {
    return branch_pair_;
  }

 private:
  std::optional<std::string> lower_bound_;
  std::optional<std::pair<std::size_t, std::size_t>> branch_pair_;
};

// Exhaustive branch matching refused because the germ has too many branches.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point estimation could not produce a value (empty constraint
// set, zero gap, degenerate regression).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace holdercurve

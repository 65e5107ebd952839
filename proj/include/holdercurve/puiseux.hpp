#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "holdercurve/cyclotomic.hpp"
#include "holdercurve/exactnum.hpp"

namespace holdercurve {

struct PuiseuxTerm {
  std::int64_t exponent;
  CyclotomicNumber coeff;

  friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

/// Truncated parametrization x = t^n, y = sum_m a_m t^m of a plane branch.
///
/// Coefficients of exponents greater than `truncation` are unknown. All
/// coefficients live in Q(zeta_N), N = field_order, and n divides N so that
/// every conjugate stays in the same field.
class PuiseuxBranch {
 public:
  /// Throws ValidationError unless: n >= 1, n | field_order, exponents are
  /// positive, strictly increasing and <= truncation, coefficients are
  /// nonzero elements of Q(zeta_field_order).
  PuiseuxBranch(std::int64_t multiplicity, std::vector<PuiseuxTerm> terms,
                std::int64_t truncation, int field_order);

  std::int64_t multiplicity() const noexcept { return n_; }
  std::span<const PuiseuxTerm> terms() const noexcept { return terms_; }
  std::int64_t truncation() const noexcept { return truncation_; }
  int field_order() const noexcept { return field_order_; }

  friend bool operator==(const PuiseuxBranch&, const PuiseuxBranch&) = default;

 private:
  std::int64_t n_;
  std::vector<PuiseuxTerm> terms_;
  std::int64_t truncation_;
  int field_order_;
};

/// Outcome of an order-of-vanishing computation: either an exact x-order or
/// the statement that the series agree as far as both are known, with the
/// best lower bound for the true order.
class DifferenceOrder {
 public:
  static DifferenceOrder exact(BigRational value) {
    return DifferenceOrder(std::move(value), true);
  }
  static DifferenceOrder truncated(BigRational lower_bound) {
    return DifferenceOrder(std::move(lower_bound), false);
  }

  bool is_exact() const noexcept { return exact_; }
  /// Throws std::logic_error on a truncated outcome.
  const BigRational& value() const;
  /// The exact value, or the lower bound when truncated.
  const BigRational& bound() const noexcept { return value_; }

  friend bool operator==(const DifferenceOrder&, const DifferenceOrder&) = default;

 private:
  DifferenceOrder(BigRational v, bool exact) : value_(std::move(v)), exact_(exact) {}

  BigRational value_;
  bool exact_;
};

/// Replaces t by zeta_n^k t. Any integer k is accepted and taken mod n.
PuiseuxBranch conjugate(const PuiseuxBranch& branch, std::int64_t k);

/// ord_x(y1 - y2) after rescaling both branches to a common parameter
/// x = s^lcm(n1, n2). Throws FieldOrderMismatch if the fields differ.
DifferenceOrder difference_order(const PuiseuxBranch& b1,
                                 const PuiseuxBranch& b2);

/// A reduced plane curve germ: one or more pairwise distinct branches over a
/// shared cyclotomic field.
class CurveGerm {
 public:
  /// Throws ValidationError for an empty branch list, mixed field orders, or
  /// two entries equal up to conjugation (same n, truncation and terms), and
  /// TruncationError when two entries agree under some conjugation on every
  /// known term.
  explicit CurveGerm(std::vector<PuiseuxBranch> branches);

  std::span<const PuiseuxBranch> branches() const noexcept { return branches_; }
  std::size_t size() const noexcept { return branches_.size(); }
  const PuiseuxBranch& operator[](std::size_t i) const { return branches_[i]; }
  int field_order() const noexcept { return branches_.front().field_order(); }

 private:
  std::vector<PuiseuxBranch> branches_;
};

}  // namespace holdercurve

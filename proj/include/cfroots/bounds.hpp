#pragma once

#include "cfroots/poly.hpp"

namespace cfroots {

// A bound on the positive real roots restricted to powers of two, or the
// certificate that no positive root exists (no coefficient opposes the
// sign of the leading one).
class Pow2Bound {
 public:
  static Pow2Bound no_positive_root() { return Pow2Bound(false, 0); }
  static Pow2Bound from_exponent(long e) { return Pow2Bound(true, e); }

  bool is_no_positive_root() const { return !has_bound_; }
  long exponent() const;
  Rational value() const;  // 2^exponent

 private:
  Pow2Bound(bool has_bound, long exponent)
      : has_bound_(has_bound), exponent_(exponent) {}

  bool has_bound_;
  long exponent_;
};

// Smallest power of two >= 2 max over opposing-sign indices j of
// (|a_j| / |a_d|)^(1/(d-j)); at least every positive real root of A.
// Computed with integer shifts and comparisons only.
Pow2Bound positive_root_upper_bound(const IntPoly& a);

// Inverse of the upper bound on the roots of X^d A(1/X); at most every
// positive real root of A. Requires A(0) != 0.
Pow2Bound positive_lower_bound(const IntPoly& a);

}  // namespace cfroots

#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "cfroots/rational.hpp"

namespace cfroots {

// Dense univariate polynomial over arbitrary-precision integers.
// coeff(i) multiplies X^i; the highest stored coefficient is nonzero
// unless the polynomial is zero, which is stored as the single
// coefficient 0.
class IntPoly {
 public:
  IntPoly() : coeffs_{BigInt(0)} {}
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(BigInt c);
  static IntPoly from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const BigInt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const BigInt& leading() const { return coeffs_.back(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  // Maximum bit length over |coefficients| (the quantity written tau).
  std::size_t max_coeff_bits() const;

  bool operator==(const IntPoly&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& a);

// Sign of A(q), computed exactly through the homogenized sum
// sum a_i num^i den^(d-i).
Sign evaluate_sign(const IntPoly& a, const Rational& q);

// Sign of A at +inf (negative_end = false) or -inf.
Sign sign_at_infinity(const IntPoly& a, bool negative_end);

// Var(A): sign changes in the coefficient list, zeros skipped.
// The zero polynomial is rejected.
int sign_variations(const IntPoly& a);

// B(X) = A(X + c).
IntPoly taylor_shift(const IntPoly& a, const BigInt& c);

// A(2^beta X) divided by the largest common power of two of the result.
IntPoly homothety_pow2(const IntPoly& a, unsigned long beta);

// X^d A(1/X); requires A(0) != 0 so the degree is preserved.
IntPoly reverse(const IntPoly& a);

// (1+X)^d A(1/(1+X)) after deflating zero roots of A; positive roots of
// the result correspond to roots of A in (0, 1).
IntPoly invert_unit(const IntPoly& a);

// A(-X).
IntPoly negate_variable(const IntPoly& a);

// -A.
IntPoly negated(const IntPoly& a);

// (B, k) with A = X^k B and B(0) != 0.
std::pair<IntPoly, int> deflate_zero_roots(const IntPoly& a);

IntPoly derivative(const IntPoly& a);

IntPoly multiply(const IntPoly& a, const IntPoly& b);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly subtract(const IntPoly& a, const IntPoly& b);

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return multiply(a, b); }
inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return add(a, b); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return subtract(a, b); }

// (content, primitive): content = gcd of |coefficients| > 0, primitive has
// content 1 and positive leading coefficient, A = +-content * primitive.
std::pair<BigInt, IntPoly> content_and_primitive(const IntPoly& a);

// Remainder of a modulo b scaled by |lc(b)|^(deg a - deg b + 1), so the
// result is a positive constant multiple of the true remainder.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b; throws std::logic_error if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Primitive part of A / gcd(A, A'); same distinct roots, all simple.
IntPoly square_free_part(const IntPoly& a);

struct YunFactor {
  IntPoly factor;    // primitive, positive leading coefficient, square-free
  int multiplicity;  // A = c * prod factor^multiplicity
};

// Yun's square-free factorization; degree-0 factors omitted, multiplicities
// ascending.
std::vector<YunFactor> yun_square_free_factorization(const IntPoly& a);

}  // namespace cfroots

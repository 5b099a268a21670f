#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfroots {

using BigInt = mpz_class;

// Exact rational in canonical form: positive denominator, reduced.
using Rational = mpq_class;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline int sign_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_of(const BigInt& v) {
  const int s = mpz_sgn(v.get_mpz_t());
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign sign_of(const Rational& q) {
  const int s = mpq_sgn(q.get_mpq_t());
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

// Canonical num/den; den must be nonzero.
Rational make_rational(BigInt num, BigInt den);
Rational make_rational(long value);

// 2^exponent as an exact rational; the exponent may be negative.
Rational pow2_rational(long exponent);

BigInt pow2_bigint(unsigned long exponent);

// Bit length of |v|; bit_length(0) == 1, matching the convention L(a) >= 1.
std::size_t bit_length(const BigInt& v);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

// A rational extended with the two infinities. Maps composed by the solver
// only ever produce finite values or +inf; -inf exists for root counting
// over the whole line.
class ExtendedRational {
 public:
  ExtendedRational() : kind_(Kind::finite) {}
  ExtendedRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}
  ExtendedRational(long value) : kind_(Kind::finite), value_(value) {}

  static ExtendedRational infinity();
  static ExtendedRational minus_infinity();

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinity() const { return kind_ == Kind::pos_inf; }
  bool is_minus_infinity() const { return kind_ == Kind::neg_inf; }

  const Rational& value() const;

  // Total order with -inf < finite < +inf.
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);

 private:
  enum class Kind { neg_inf, finite, pos_inf };
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

std::string format_extended(const ExtendedRational& q);

}  // namespace cfroots

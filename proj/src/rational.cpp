#include "cfroots/rational.hpp"

#include <utility>

namespace cfroots {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Rational make_rational(long value) { return Rational(value); }

Rational pow2_rational(long exponent) {
  BigInt p = 1;
  p <<= static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  return exponent >= 0 ? Rational(p) : make_rational(1, p);
}

BigInt pow2_bigint(unsigned long exponent) {
  BigInt p = 1;
  p <<= exponent;
  return p;
}

std::size_t bit_length(const BigInt& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::string format_rational(const Rational& q) { return q.get_str(); }

ExtendedRational ExtendedRational::infinity() {
  return ExtendedRational(Kind::pos_inf);
}

ExtendedRational ExtendedRational::minus_infinity() {
  return ExtendedRational(Kind::neg_inf);
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::finite)
    throw std::logic_error("ExtendedRational: value() on an infinity");
  return value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.kind_ != ExtendedRational::Kind::finite) return false;
  return a.value_ < b.value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != ExtendedRational::Kind::finite) return true;
  return a.value_ == b.value_;
}

std::string format_extended(const ExtendedRational& q) {
  if (q.is_infinity()) return "inf";
  if (q.is_minus_infinity()) return "-inf";
  return format_rational(q.value());
}

}  // namespace cfroots

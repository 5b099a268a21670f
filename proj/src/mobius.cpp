#include "cfroots/mobius.hpp"

#include <stdexcept>

namespace cfroots {

MobiusMap MobiusMap::compose_shift(const BigInt& c) const {
  return MobiusMap(k_, k_ * c + l_, m_, m_ * c + n_);
}

MobiusMap MobiusMap::compose_homothety_pow2(unsigned long beta) const {
  BigInt k = k_;
  BigInt m = m_;
  k <<= beta;
  m <<= beta;
  return MobiusMap(std::move(k), l_, std::move(m), n_);
}

MobiusMap MobiusMap::compose_invert_unit() const {
  return MobiusMap(l_, k_ + l_, n_, m_ + n_);
}

ExtendedRational MobiusMap::image(const ExtendedRational& q) const {
  if (q.is_minus_infinity())
    throw std::invalid_argument("MobiusMap::image: -inf is not in the domain");
  if (q.is_infinity()) {
    if (m_ == 0) {
      if (k_ == 0) throw std::invalid_argument("MobiusMap::image: degenerate map");
      return ExtendedRational::infinity();
    }
    return make_rational(k_, m_);
  }
  const BigInt& p = q.value().get_num();
  const BigInt& r = q.value().get_den();
  BigInt num = k_ * p + l_ * r;
  BigInt den = m_ * p + n_ * r;
  if (den == 0) {
    if (num == 0) throw std::invalid_argument("MobiusMap::image: degenerate map");
    return ExtendedRational::infinity();
  }
  return make_rational(std::move(num), std::move(den));
}

std::pair<Rational, Rational> MobiusMap::to_interval(const Rational& fallback_upper) const {
  const ExtendedRational at_zero = image(Rational(0));
  if (!at_zero.is_finite())
    throw std::invalid_argument("MobiusMap::to_interval: map unbounded at 0");
  const ExtendedRational at_inf = image(ExtendedRational::infinity());
  Rational lo = at_zero.value();
  Rational hi = at_inf.is_finite() ? at_inf.value() : image(fallback_upper).value();
  if (hi < lo) std::swap(lo, hi);
  return {std::move(lo), std::move(hi)};
}

}  // namespace cfroots

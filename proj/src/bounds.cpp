#include "cfroots/bounds.hpp"

#include <stdexcept>

namespace cfroots {

namespace {

// Whether lead * 2^(e * gap) >= target, all quantities positive.
bool exponent_suffices(const BigInt& lead, const BigInt& target, unsigned gap, long e) {
  BigInt lhs = lead;
  if (e >= 0) {
    lhs <<= static_cast<unsigned long>(e) * gap;
    return lhs >= target;
  }
  BigInt rhs = target;
  rhs <<= static_cast<unsigned long>(-e) * gap;
  return lhs >= rhs;
}

// Smallest e with lead * 2^(e * gap) >= target.
long min_exponent_for(const BigInt& lead, const BigInt& target, unsigned gap) {
  long hi = static_cast<long>(bit_length(target) / gap) + 2;
  long lo = -static_cast<long>(bit_length(lead) / gap) - 2;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (exponent_suffices(lead, target, gap, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

long Pow2Bound::exponent() const {
  if (!has_bound_) throw std::logic_error("Pow2Bound: no positive root");
  return exponent_;
}

Rational Pow2Bound::value() const { return pow2_rational(exponent()); }

Pow2Bound positive_root_upper_bound(const IntPoly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("positive_root_upper_bound: degree >= 1 required");
  const int d = a.degree();
  const Sign lead_sign = sign_of(a.leading());
  const Sign opposing = lead_sign == Sign::positive ? Sign::negative : Sign::positive;
  const BigInt lead_abs = abs(a.leading());
  bool any = false;
  long best = 0;
  for (int j = 0; j < d; ++j) {
    if (sign_of(a.coeff(j)) != opposing) continue;
    const unsigned gap = static_cast<unsigned>(d - j);
    // Smallest e_j with 2^(e_j - 1) >= (|a_j| / |a_d|)^(1/gap), i.e.
    // |a_d| 2^((e_j - 1) gap) >= |a_j|.
    const BigInt target = abs(a.coeff(j));
    const long e_j = min_exponent_for(lead_abs, target, gap) + 1;
    if (!any || e_j > best) best = e_j;
    any = true;
  }
  if (!any) return Pow2Bound::no_positive_root();
  return Pow2Bound::from_exponent(best);
}

Pow2Bound positive_lower_bound(const IntPoly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("positive_lower_bound: degree >= 1 required");
  if (a.coeff(0) == 0)
    throw std::invalid_argument(
        "positive_lower_bound: constant term is zero; deflate zero roots first");
  const Pow2Bound upper = positive_root_upper_bound(reverse(a));
  if (upper.is_no_positive_root()) return upper;
  return Pow2Bound::from_exponent(-upper.exponent());
}

}  // namespace cfroots

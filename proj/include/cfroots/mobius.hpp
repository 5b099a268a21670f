#pragma once

#include <utility>

#include "cfroots/rational.hpp"

namespace cfroots {

// X -> (kX + l) / (mX + n) with integer entries and nonzero determinant.
// The entries are the convergent numerators and denominators of the
// continued fraction expansion built by the solver, interleaved with
// power-of-two scaling; they are kept unreduced.
class MobiusMap {
 public:
  MobiusMap() : k_(1), l_(0), m_(0), n_(1) {}
  MobiusMap(BigInt k, BigInt l, BigInt m, BigInt n)
      : k_(std::move(k)), l_(std::move(l)), m_(std::move(m)), n_(std::move(n)) {}

  static MobiusMap identity() { return MobiusMap(); }

  const BigInt& k() const { return k_; }
  const BigInt& l() const { return l_; }
  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }

  BigInt determinant() const { return k_ * n_ - l_ * m_; }

  // M composed with X -> X + c.
  MobiusMap compose_shift(const BigInt& c) const;

  // M composed with X -> 2^beta X.
  MobiusMap compose_homothety_pow2(unsigned long beta) const;

  // M composed with X -> 1/(1+X).
  MobiusMap compose_invert_unit() const;

  // (k q + l) / (m q + n) in lowest terms; image(inf) = k/m, or the point
  // at infinity when m = 0.
  ExtendedRational image(const ExtendedRational& q) const;

  // Endpoints {image(0), image(inf)} sorted ascending, with an infinite
  // image(inf) replaced by image(fallback_upper); fallback_upper must be a
  // certified upper bound on the positive roots of the node polynomial.
  std::pair<Rational, Rational> to_interval(const Rational& fallback_upper) const;

  bool operator==(const MobiusMap&) const = default;

 private:
  BigInt k_, l_, m_, n_;
};

}  // namespace cfroots

#include "cfroots/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfroots {

namespace {

// Divide by the positive content, keeping the sign of every coefficient.
IntPoly strip_positive_content(const IntPoly& a) {
  if (a.is_zero()) return a;
  BigInt content = 0;
  for (const BigInt& c : a.coeffs()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return a;
  }
  std::vector<BigInt> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(out));
}

Sign sign_at(const IntPoly& a, const ExtendedRational& q) {
  if (q.is_finite()) return evaluate_sign(a, q.value());
  return sign_at_infinity(a, q.is_minus_infinity());
}

bool disjoint(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.is_point() && b.is_point()) return a.lo != b.lo;
  if (a.is_point()) return a.lo <= b.lo || a.lo >= b.hi;
  if (b.is_point()) return b.lo <= a.lo || b.lo >= a.hi;
  return a.hi <= b.lo || b.hi <= a.lo;
}

std::string describe(const IsolatingInterval& iv) {
  if (iv.is_point()) return "[" + format_rational(iv.lo) + "]";
  return "(" + format_rational(iv.lo) + ", " + format_rational(iv.hi) + ")";
}

}  // namespace

SturmSequence sturm_sequence(const IntPoly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("sturm_sequence: degree >= 1 required");
  std::vector<IntPoly> seq;
  seq.push_back(a);
  seq.push_back(strip_positive_content(derivative(a)));
  while (true) {
    const IntPoly& last = seq.back();
    if (last.degree() == 0) break;
    IntPoly rem = pseudo_remainder(seq[seq.size() - 2], last);
    if (rem.is_zero()) break;
    seq.push_back(negated(strip_positive_content(rem)));
  }
  return SturmSequence{std::move(seq)};
}

int variations_at(const SturmSequence& seq, const ExtendedRational& q) {
  int var = 0;
  Sign prev = Sign::zero;
  for (const IntPoly& s : seq.elements) {
    const Sign cur = sign_at(s, q);
    if (cur == Sign::zero) continue;
    if (prev != Sign::zero && cur != prev) ++var;
    prev = cur;
  }
  return var;
}

int count_roots_in(const IntPoly& a, const ExtendedRational& lo,
                   const ExtendedRational& hi) {
  if (!(lo < hi))
    throw std::invalid_argument("count_roots_in: lo < hi required");
  if (lo.is_finite() && evaluate_sign(a, lo.value()) == Sign::zero)
    throw std::invalid_argument("count_roots_in: A(lo) must be nonzero");
  const SturmSequence seq = sturm_sequence(a);
  return variations_at(seq, lo) - variations_at(seq, hi);
}

int count_real_roots(const IntPoly& a) {
  const SturmSequence seq = sturm_sequence(a);
  return variations_at(seq, ExtendedRational::minus_infinity()) -
         variations_at(seq, ExtendedRational::infinity());
}

VerifyResult verify_isolation(const IntPoly& a_in, const IsolationReport& report) {
  VerifyResult res;
  if (a_in.is_zero() || a_in.degree() < 1) {
    res.fail("input must have degree >= 1");
    return res;
  }
  const IntPoly sf = square_free_part(a_in);
  const SturmSequence seq = sturm_sequence(sf);

  for (const IsolatingInterval& iv : report.intervals) {
    if (iv.is_point()) {
      // (a) points are exact roots of the input
      if (evaluate_sign(a_in, iv.lo) != Sign::zero)
        res.fail("(a) point " + describe(iv) + " is not a root");
      continue;
    }
    // (b) open intervals hold exactly one distinct root, endpoints non-roots
    if (!(iv.lo < iv.hi)) {
      res.fail("(b) interval " + describe(iv) + " is empty or reversed");
      continue;
    }
    if (evaluate_sign(sf, iv.lo) == Sign::zero ||
        evaluate_sign(sf, iv.hi) == Sign::zero) {
      res.fail("(b) interval " + describe(iv) + " has a root at an endpoint");
      continue;
    }
    const int count = variations_at(seq, iv.lo) - variations_at(seq, iv.hi);
    if (count != 1)
      res.fail("(b) interval " + describe(iv) + " contains " +
               std::to_string(count) + " roots");
  }

  // (c) pairwise disjoint
  std::vector<IsolatingInterval> sorted = report.intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const IsolatingInterval& x, const IsolatingInterval& y) {
              if (x.lo != y.lo) return x.lo < y.lo;
              return x.hi < y.hi;
            });
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (!disjoint(sorted[i], sorted[j]))
        res.fail("(c) " + describe(sorted[i]) + " and " + describe(sorted[j]) +
                 " overlap");

  // (d) every distinct real root is covered
  const int total = variations_at(seq, ExtendedRational::minus_infinity()) -
                    variations_at(seq, ExtendedRational::infinity());
  if (static_cast<int>(report.intervals.size()) != total)
    res.fail("(d) " + std::to_string(report.intervals.size()) +
             " intervals for " + std::to_string(total) + " distinct real roots");

  // (e) multiplicities agree with the Yun factorization
  const std::vector<YunFactor> factors = yun_square_free_factorization(a_in);
  for (const IsolatingInterval& iv : report.intervals) {
    int matches = 0;
    int multiplicity = 0;
    for (const YunFactor& f : factors) {
      const bool match =
          iv.is_point()
              ? evaluate_sign(f.factor, iv.lo) == Sign::zero
              : sign_int(evaluate_sign(f.factor, iv.lo)) *
                        sign_int(evaluate_sign(f.factor, iv.hi)) <
                    0;
      if (match) {
        ++matches;
        multiplicity = f.multiplicity;
      }
    }
    if (matches != 1) {
      res.fail("(e) " + describe(iv) + " matches " + std::to_string(matches) +
               " square-free factors");
    } else if (multiplicity != iv.multiplicity) {
      res.fail("(e) " + describe(iv) + " has multiplicity " +
               std::to_string(iv.multiplicity) + ", factor says " +
               std::to_string(multiplicity));
    }
  }
  return res;
}

}  // namespace cfroots

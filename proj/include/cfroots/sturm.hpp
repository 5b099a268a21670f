#pragma once

#include <string>
#include <vector>

#include "cfroots/poly.hpp"
#include "cfroots/solver.hpp"

namespace cfroots {

// Signed remainder sequence: S0 = A, S1 = A', S_{i+1} = -rem(S_{i-1}, S_i),
// each element up to a positive constant factor, ending at a nonzero
// constant or the gcd.
struct SturmSequence {
  std::vector<IntPoly> elements;
};

SturmSequence sturm_sequence(const IntPoly& a);

// Sign variations of the sequence evaluated at q (infinities through
// leading coefficients and degree parity), zeros skipped.
int variations_at(const SturmSequence& seq, const ExtendedRational& q);

// Distinct real roots in (lo, hi]; requires lo < hi and A(lo) != 0 for
// finite lo.
int count_roots_in(const IntPoly& a, const ExtendedRational& lo,
                   const ExtendedRational& hi);

int count_real_roots(const IntPoly& a);

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    pass = false;
    failures.push_back(std::move(message));
  }
};

// Certifies an isolation report against the input polynomial: points are
// exact roots, each open interval holds exactly one distinct root with
// non-vanishing endpoints, intervals are pairwise disjoint, no root is
// missed, multiplicities match the Yun factorization.
VerifyResult verify_isolation(const IntPoly& a_in, const IsolationReport& report);

}  // namespace cfroots

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cfroots/poly.hpp"

namespace cfroots {

enum class Family {
  laguerre,
  chebyshev1,
  chebyshev2,
  wilkinson,
  mignotte1,
  mignotte2,
  random,
  monic_random,
};

struct FamilySpec {
  Family family = Family::wilkinson;
  int degree = 1;
  std::uint64_t seed = 0;      // random families only
  long coeff_bound = 1000;     // random families only
};

// SplitMix64 with the standard constants; identical streams everywhere,
// which is what makes the random families reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [lo, hi] by rejection sampling (no modulo bias).
  long uniform_in(long lo, long hi);

 private:
  std::uint64_t state_;
};

// prod_{i=1..d} (X - i)
IntPoly wilkinson(int degree);

// d! L_d(X) carried in integer form through the scaled recurrence
// p_{n+1} = (2n+1 - X) p_n - n^2 p_{n-1}.
IntPoly laguerre_scaled(int degree);

// T_d and U_d through the three-term recurrence.
IntPoly chebyshev_t(int degree);
IntPoly chebyshev_u(int degree);

// X^d - 2(101X - 1)^2; degree >= 3.
IntPoly mignotte1(int degree);

// mignotte1(d) times 101^2 X^d - 2((101^2 + 1)X - 101)^2, the second factor
// scaled by 101^2 to clear the fraction; degree 2d.
IntPoly mignotte2(int degree);

// Coefficients uniform in [-coeff_bound, coeff_bound]; the leading one is
// redrawn while zero. The monic variant forces leading coefficient 1.
IntPoly random_poly(int degree, long coeff_bound, std::uint64_t seed);
IntPoly monic_random(int degree, long coeff_bound, std::uint64_t seed);

IntPoly make_family(const FamilySpec& spec);

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);

}  // namespace cfroots

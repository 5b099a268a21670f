#include "cfroots/families.hpp"

#include <array>
#include <stdexcept>

namespace cfroots {

namespace {

void require_degree(int degree, int minimum, const char* who) {
  if (degree < minimum)
    throw std::invalid_argument(std::string(who) + ": degree >= " +
                                std::to_string(minimum) + " required");
}

// b_{n+1} = (c1 + c0 X) b_n + s b_{n-1}
IntPoly linear_step(const IntPoly& b_n, const IntPoly& b_prev, long c0, long c1, long s) {
  IntPoly scaled = multiply(IntPoly::from_ints({c1, c0}), b_n);
  return add(scaled, multiply(IntPoly::constant(s), b_prev));
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::uniform_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("SplitMix64::uniform_in: empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long>(next());  // full 64-bit range
  const std::uint64_t reject_above = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= reject_above);
  return lo + static_cast<long>(draw % span);
}

IntPoly wilkinson(int degree) {
  require_degree(degree, 1, "wilkinson");
  IntPoly p = IntPoly::constant(1);
  for (int i = 1; i <= degree; ++i)
    p = multiply(p, IntPoly::from_ints({-i, 1}));
  return p;
}

IntPoly laguerre_scaled(int degree) {
  require_degree(degree, 1, "laguerre_scaled");
  IntPoly prev = IntPoly::constant(1);     // 0! L_0
  IntPoly cur = IntPoly::from_ints({1, -1});  // 1! L_1 = 1 - X
  for (long n = 1; n < degree; ++n) {
    IntPoly next = linear_step(cur, prev, -1, 2 * n + 1, -n * n);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly chebyshev_t(int degree) {
  require_degree(degree, 1, "chebyshev_t");
  IntPoly prev = IntPoly::constant(1);
  IntPoly cur = IntPoly::from_ints({0, 1});
  for (int n = 1; n < degree; ++n) {
    IntPoly next = linear_step(cur, prev, 2, 0, -1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly chebyshev_u(int degree) {
  require_degree(degree, 1, "chebyshev_u");
  IntPoly prev = IntPoly::constant(1);
  IntPoly cur = IntPoly::from_ints({0, 2});
  for (int n = 1; n < degree; ++n) {
    IntPoly next = linear_step(cur, prev, 2, 0, -1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly mignotte1(int degree) {
  require_degree(degree, 3, "mignotte1");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[static_cast<std::size_t>(degree)] = 1;
  // - 2 (101 X - 1)^2 = -20402 X^2 + 404 X - 2
  coeffs[0] -= 2;
  coeffs[1] += 404;
  coeffs[2] -= 20402;
  return IntPoly(std::move(coeffs));
}

IntPoly mignotte2(int degree) {
  require_degree(degree, 3, "mignotte2");
  const BigInt q = 101 * 101;      // clears the 1/101 in (101 + 1/101)X - 1
  const BigInt t = q + 1;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[static_cast<std::size_t>(degree)] = q;
  // - 2 (t X - 101)^2
  coeffs[0] -= 2 * q;
  coeffs[1] += 4 * t * 101;
  coeffs[2] -= 2 * t * t;
  return multiply(mignotte1(degree), IntPoly(std::move(coeffs)));
}

IntPoly random_poly(int degree, long coeff_bound, std::uint64_t seed) {
  require_degree(degree, 1, "random_poly");
  if (coeff_bound < 1)
    throw std::invalid_argument("random_poly: coeff_bound >= 1 required");
  SplitMix64 rng(seed);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i)
    coeffs[static_cast<std::size_t>(i)] = rng.uniform_in(-coeff_bound, coeff_bound);
  while (coeffs.back() == 0) coeffs.back() = rng.uniform_in(-coeff_bound, coeff_bound);
  return IntPoly(std::move(coeffs));
}

IntPoly monic_random(int degree, long coeff_bound, std::uint64_t seed) {
  require_degree(degree, 1, "monic_random");
  if (coeff_bound < 1)
    throw std::invalid_argument("monic_random: coeff_bound >= 1 required");
  SplitMix64 rng(seed);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i)
    coeffs[static_cast<std::size_t>(i)] = rng.uniform_in(-coeff_bound, coeff_bound);
  coeffs.back() = 1;
  return IntPoly(std::move(coeffs));
}

IntPoly make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::laguerre: return laguerre_scaled(spec.degree);
    case Family::chebyshev1: return chebyshev_t(spec.degree);
    case Family::chebyshev2: return chebyshev_u(spec.degree);
    case Family::wilkinson: return wilkinson(spec.degree);
    case Family::mignotte1: return mignotte1(spec.degree);
    case Family::mignotte2: return mignotte2(spec.degree);
    case Family::random: return random_poly(spec.degree, spec.coeff_bound, spec.seed);
    case Family::monic_random:
      return monic_random(spec.degree, spec.coeff_bound, spec.seed);
  }
  throw std::invalid_argument("make_family: unknown family");
}

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 8> kFamilyNames = {{
    {"laguerre", Family::laguerre},
    {"chebyshev1", Family::chebyshev1},
    {"chebyshev2", Family::chebyshev2},
    {"wilkinson", Family::wilkinson},
    {"mignotte1", Family::mignotte1},
    {"mignotte2", Family::mignotte2},
    {"random", Family::random},
    {"monic_random", Family::monic_random},
}};

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [n, f] : kFamilyNames)
    if (n == name) return f;
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const auto& [n, f] : kFamilyNames)
    if (f == family) return n;
  return "unknown";
}

}  // namespace cfroots

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfroots/bounds.hpp"
#include "cfroots/families.hpp"
#include "cfroots/sturm.hpp"

using namespace cfroots;

namespace {

IntPoly P(std::initializer_list<long> coeffs) { return IntPoly::from_ints(coeffs); }

}  // namespace

TEST_CASE("positive_root_upper_bound examples") {
  CHECK(positive_root_upper_bound(P({-4, 0, 1})).exponent() == 2);  // X^2-4 -> 4
  CHECK(positive_root_upper_bound(P({1, 0, 1})).is_no_positive_root());
  CHECK(positive_root_upper_bound(P({-3, 1})).exponent() == 3);  // X-3 -> 8
  CHECK_THROWS_AS(positive_root_upper_bound(P({7})), std::invalid_argument);
}

TEST_CASE("positive_lower_bound examples") {
  CHECK(positive_lower_bound(P({-4, 0, 1})).exponent() == 0);   // X^2-4 -> 1
  CHECK(positive_lower_bound(P({-2, 0, 1})).exponent() == -1);  // X^2-2 -> 1/2
  CHECK(positive_lower_bound(P({1, 1})).is_no_positive_root());
  CHECK_THROWS_AS(positive_lower_bound(P({0, 1})), std::invalid_argument);
}

TEST_CASE("bound soundness on polynomials with known roots") {
  SplitMix64 rng(31);
  for (int round = 0; round < 200; ++round) {
    // Product of linear factors den X - num with known positive roots.
    const int factors = static_cast<int>(rng.uniform_in(1, 5));
    IntPoly a = IntPoly::constant(1);
    std::vector<Rational> roots;
    for (int i = 0; i < factors; ++i) {
      const long num = rng.uniform_in(1, 500);
      const long den = rng.uniform_in(1, 16);
      std::vector<BigInt> lin{BigInt(-num), BigInt(den)};
      a = multiply(a, IntPoly(std::move(lin)));
      roots.push_back(make_rational(num, den));
    }
    const Rational upper = positive_root_upper_bound(a).value();
    const Rational lower = positive_lower_bound(a).value();
    for (const Rational& r : roots) {
      CHECK(r <= upper);
      CHECK(lower <= r);
    }
  }
}

TEST_CASE("lower bound admits no root below it (oracle)") {
  SplitMix64 rng(32);
  int checked = 0;
  for (int round = 0; round < 200 && checked < 120; ++round) {
    const int d = static_cast<int>(rng.uniform_in(2, 10));
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rng.uniform_in(-50, 50);
    while (c[0] == 0) c[0] = rng.uniform_in(-50, 50);
    while (c.back() == 0) c.back() = rng.uniform_in(-50, 50);
    const IntPoly a(std::move(c));
    const Pow2Bound plb = positive_lower_bound(a);
    if (plb.is_no_positive_root()) continue;
    ++checked;
    const Rational b = plb.value();
    int inside = count_roots_in(a, Rational(0), b);
    if (evaluate_sign(a, b) == Sign::zero) --inside;  // (0, b] minus the endpoint
    CHECK(inside == 0);
  }
  CHECK(checked > 50);
}

TEST_CASE("bound quality against the single-positive-root construction") {
  SplitMix64 rng(33);
  for (int round = 0; round < 200; ++round) {
    // C = a_d X^d - sum of negative lower terms, constant term negative, so
    // C has exactly one nonnegative root t and is negative before it.
    const int d = static_cast<int>(rng.uniform_in(2, 9));
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    c[0] = -rng.uniform_in(1, 1000);
    c.back() = rng.uniform_in(1, 30);
    for (int j = 1; j < d; ++j)
      c[static_cast<std::size_t>(j)] =
          rng.uniform_in(0, 1) ? BigInt(0) : BigInt(-rng.uniform_in(1, 1000));
    const IntPoly poly(std::move(c));
    const long e = positive_root_upper_bound(poly).exponent();
    // t <= bound < 4t with power-of-two rounding:
    CHECK(evaluate_sign(poly, pow2_rational(e)) != Sign::negative);
    CHECK(evaluate_sign(poly, pow2_rational(e - 2)) == Sign::negative);
  }
}

TEST_CASE("pre-rounding quality t <= 2|a_(d-1)/a_d| < 2t when the gap is one") {
  SplitMix64 rng(34);
  for (int round = 0; round < 100; ++round) {
    // C = a_d X^d - |b| X^(d-1) - small constant: the maximum term has gap 1
    // and the pre-rounding bound 2 |b| / a_d is rational, so the sharper
    // claim is checkable exactly.
    const int d = static_cast<int>(rng.uniform_in(2, 7));
    const long lead = rng.uniform_in(1, 9);
    const long b = rng.uniform_in(1000, 4000);
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    c.back() = lead;
    c[static_cast<std::size_t>(d - 1)] = -b;
    c[0] = -1;
    const IntPoly poly(std::move(c));
    const Rational pre = make_rational(2 * b, lead);
    CHECK(evaluate_sign(poly, pre) != Sign::negative);       // t <= pre
    CHECK(evaluate_sign(poly, pre / 2) == Sign::negative);   // pre < 2t
  }
}

TEST_CASE("lower bound is the exact inverse of the reversed upper bound") {
  SplitMix64 rng(35);
  for (int round = 0; round < 100; ++round) {
    const int d = static_cast<int>(rng.uniform_in(1, 10));
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rng.uniform_in(-99, 99);
    while (c[0] == 0) c[0] = rng.uniform_in(-99, 99);
    while (c.back() == 0) c.back() = rng.uniform_in(-99, 99);
    const IntPoly a(std::move(c));
    const Pow2Bound upper = positive_root_upper_bound(reverse(a));
    const Pow2Bound lower = positive_lower_bound(a);
    if (upper.is_no_positive_root()) {
      CHECK(lower.is_no_positive_root());
    } else {
      CHECK(lower.value() * upper.value() == 1);
    }
  }
}

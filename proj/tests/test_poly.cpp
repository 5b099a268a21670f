#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfroots/families.hpp"
#include "cfroots/poly.hpp"

using namespace cfroots;

namespace {

IntPoly P(std::initializer_list<long> coeffs) { return IntPoly::from_ints(coeffs); }

IntPoly random_small(SplitMix64& rng, int max_degree, long bound) {
  const int d = static_cast<int>(rng.uniform_in(1, max_degree));
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = rng.uniform_in(-bound, bound);
  while (c.back() == 0) c.back() = rng.uniform_in(-bound, bound);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("evaluate_sign") {
  CHECK(evaluate_sign(P({-2, 0, 1}), Rational(1)) == Sign::negative);
  CHECK(evaluate_sign(P({-2, 0, 1}), Rational(2)) == Sign::positive);
  CHECK(evaluate_sign(P({2, -3, 1}), Rational(1)) == Sign::zero);
  CHECK(evaluate_sign(P({-2, 0, 1}), make_rational(3, 2)) == Sign::positive);
  CHECK(evaluate_sign(P({-2, 0, 1}), make_rational(7, 5)) == Sign::negative);
}

TEST_CASE("sign_variations") {
  CHECK(sign_variations(P({-2, 0, 1})) == 1);
  CHECK(sign_variations(P({2, -3, 1})) == 2);
  CHECK(sign_variations(P({1, 1, 1})) == 0);
  CHECK(sign_variations(P({5})) == 0);
  CHECK_THROWS_AS(sign_variations(IntPoly()), std::invalid_argument);
}

TEST_CASE("taylor_shift examples") {
  CHECK(taylor_shift(P({0, 0, 1}), 1) == P({1, 2, 1}));
  CHECK(taylor_shift(P({-2, 0, 1}), 1) == P({-1, 2, 1}));
  CHECK(taylor_shift(P({5}), 7) == P({5}));
}

TEST_CASE("taylor_shift composition and degree") {
  SplitMix64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const IntPoly a = random_small(rng, 12, 50);
    const BigInt s = rng.uniform_in(-20, 20);
    const BigInt t = rng.uniform_in(-20, 20);
    CHECK(taylor_shift(taylor_shift(a, s), t) == taylor_shift(a, s + t));
    CHECK(taylor_shift(a, 0) == a);
    CHECK(taylor_shift(a, s).degree() == a.degree());
  }
}

TEST_CASE("homothety_pow2") {
  CHECK(homothety_pow2(P({-2, 0, 1}), 1) == P({-1, 0, 2}));
  CHECK(homothety_pow2(P({-2, 0, 1}), 0) == P({-2, 0, 1}));
  CHECK(homothety_pow2(P({0, 1}), 3) == P({0, 1}));
  CHECK_THROWS_AS(homothety_pow2(IntPoly(), 1), std::invalid_argument);

  SplitMix64 rng(12);
  for (int round = 0; round < 100; ++round) {
    const IntPoly a = random_small(rng, 10, 50);
    const unsigned long beta = static_cast<unsigned long>(rng.uniform_in(0, 6));
    const IntPoly scaled = homothety_pow2(a, beta);
    CHECK(scaled.degree() == a.degree());
    // Roots scale by 2^-beta: sign at q/2^beta matches sign at q up to the
    // positive factor stripped, checked at a few rationals.
    const Rational q = make_rational(rng.uniform_in(1, 40), rng.uniform_in(1, 9));
    const Rational shrunk = q / pow2_rational(static_cast<long>(beta));
    CHECK(evaluate_sign(scaled, shrunk) == evaluate_sign(a, q));
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(P({-2, 0, 1})) == P({1, 0, -2}));
  CHECK(reverse(P({1, 2, 1})) == P({1, 2, 1}));
  CHECK_THROWS_AS(reverse(P({0, 1})), std::invalid_argument);

  SplitMix64 rng(13);
  for (int round = 0; round < 100; ++round) {
    IntPoly a = random_small(rng, 12, 50);
    if (a.coeff(0) == 0) a = add(a, IntPoly::constant(1));
    CHECK(reverse(reverse(a)) == a);
  }
}

TEST_CASE("invert_unit examples") {
  CHECK(invert_unit(P({-1, 1})) == P({0, -1}));
  CHECK(invert_unit(P({-1, 0, 1})) == P({0, -2, -1}));
  CHECK(invert_unit(P({1})) == P({1}));
}

TEST_CASE("invert_unit agrees with evaluation at 1/(1+p)") {
  SplitMix64 rng(14);
  for (int round = 0; round < 200; ++round) {
    const IntPoly a = random_small(rng, 12, 50);
    const Rational p = make_rational(rng.uniform_in(1, 60), rng.uniform_in(1, 60));
    const Rational inv = make_rational(p.get_den(), p.get_num() + p.get_den());
    CHECK(evaluate_sign(invert_unit(a), p) == evaluate_sign(a, inv));
  }
}

TEST_CASE("negate_variable") {
  CHECK(negate_variable(P({2, -3, 1})) == P({2, 3, 1}));
  CHECK(negate_variable(P({0, 1})) == P({0, -1}));
  CHECK(negate_variable(P({1, 0, 1})) == P({1, 0, 1}));
}

TEST_CASE("deflate_zero_roots") {
  auto [b1, k1] = deflate_zero_roots(P({0, 0, 3, 1}));
  CHECK(b1 == P({3, 1}));
  CHECK(k1 == 2);
  auto [b2, k2] = deflate_zero_roots(P({1, 1}));
  CHECK(b2 == P({1, 1}));
  CHECK(k2 == 0);
  auto [b3, k3] = deflate_zero_roots(P({0, 5}));
  CHECK(b3 == P({5}));
  CHECK(k3 == 1);
  CHECK_THROWS_AS(deflate_zero_roots(IntPoly()), std::invalid_argument);
}

TEST_CASE("derivative") {
  CHECK(derivative(P({-2, 0, 1})) == P({0, 2}));
  CHECK(derivative(P({5})) == IntPoly());
  CHECK(derivative(P({1, 1, 1, 1})) == P({1, 2, 3}));
}

TEST_CASE("multiply") {
  CHECK(multiply(P({-1, 1}), P({-2, 1})) == P({2, -3, 1}));
  const IntPoly a = P({3, -1, 4});
  CHECK(multiply(a, P({1})) == a);
  CHECK(multiply(P({0}), a) == IntPoly());
}

TEST_CASE("content_and_primitive") {
  auto [c1, p1] = content_and_primitive(P({2, -4, 6}));
  CHECK(c1 == 2);
  CHECK(p1 == P({1, -2, 3}));
  auto [c2, p2] = content_and_primitive(P({-3}));
  CHECK(c2 == 3);
  CHECK(p2 == P({1}));
  auto [c3, p3] = content_and_primitive(P({1, 0, 1}));
  CHECK(c3 == 1);
  CHECK(p3 == P({1, 0, 1}));
}

TEST_CASE("gcd") {
  CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(gcd(P({1, 0, 1}), P({-1, 0, 1})) == P({1}));
  CHECK(gcd(P({2, 2}), P({4, 4})) == P({1, 1}));
  CHECK(gcd(IntPoly(), P({2, 2})) == P({1, 1}));
  CHECK_THROWS_AS(gcd(IntPoly(), IntPoly()), std::invalid_argument);
}

TEST_CASE("square_free_part") {
  CHECK(square_free_part(P({1, -2, 1})) == P({-1, 1}));
  CHECK(square_free_part(P({-2, 0, 1})) == P({-2, 0, 1}));
  CHECK(square_free_part(P({0, 0, 0, 1})) == P({0, 1}));
  CHECK_THROWS_AS(square_free_part(P({5})), std::invalid_argument);
}

TEST_CASE("square-free part divides input and is square-free") {
  SplitMix64 rng(15);
  for (int round = 0; round < 100; ++round) {
    IntPoly a = random_small(rng, 6, 8);
    if (rng.uniform_in(0, 1)) a = multiply(a, a);  // force repeated factors often
    if (a.degree() < 1) continue;
    const IntPoly sf = square_free_part(a);
    CHECK(multiply(divide_exact(a, sf), sf) == a);
    CHECK(gcd(sf, derivative(sf)).degree() == 0);
  }
}

TEST_CASE("yun examples") {
  const IntPoly a = multiply(multiply(P({-1, 1}), multiply(P({-1, 1}), P({-1, 1}))),
                             multiply(P({2, 1}), P({2, 1})));
  auto factors = yun_square_free_factorization(a);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].factor == P({2, 1}));
  CHECK(factors[0].multiplicity == 2);
  CHECK(factors[1].factor == P({-1, 1}));
  CHECK(factors[1].multiplicity == 3);

  auto single = yun_square_free_factorization(P({-2, 0, 1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].factor == P({-2, 0, 1}));
  CHECK(single[0].multiplicity == 1);

  auto mixed = yun_square_free_factorization(P({0, 0, 1, 0, 1}));  // X^2 (X^2+1)
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].factor == P({1, 0, 1}));
  CHECK(mixed[0].multiplicity == 1);
  CHECK(mixed[1].factor == P({0, 1}));
  CHECK(mixed[1].multiplicity == 2);
}

TEST_CASE("yun factors reassemble the primitive part") {
  SplitMix64 rng(16);
  for (int round = 0; round < 100; ++round) {
    IntPoly a = random_small(rng, 4, 6);
    const IntPoly b = random_small(rng, 3, 6);
    a = multiply(a, multiply(b, b));
    if (a.degree() < 1) continue;
    IntPoly rebuilt = IntPoly::constant(1);
    for (const YunFactor& f : yun_square_free_factorization(a))
      for (int i = 0; i < f.multiplicity; ++i) rebuilt = multiply(rebuilt, f.factor);
    CHECK(rebuilt == content_and_primitive(a).second);
  }
}

TEST_CASE("Budan monotonicity of shifted sign variations") {
  SplitMix64 rng(17);
  for (int round = 0; round < 300; ++round) {
    const IntPoly a = random_small(rng, 12, 50);
    long s = rng.uniform_in(-8, 8);
    long t = rng.uniform_in(-8, 8);
    if (s > t) std::swap(s, t);
    if (s == t) ++t;
    CHECK(sign_variations(taylor_shift(a, s)) >= sign_variations(taylor_shift(a, t)));
  }
}

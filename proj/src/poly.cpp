#include "cfroots/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cfroots {

namespace {

std::vector<BigInt> trimmed(std::vector<BigInt> c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.emplace_back(0);
  return c;
}

void require_nonzero(const IntPoly& a, const char* op) {
  if (a.is_zero())
    throw std::invalid_argument(std::string(op) + ": zero polynomial");
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

IntPoly IntPoly::constant(BigInt c) {
  std::vector<BigInt> v;
  v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

std::size_t IntPoly::max_coeff_bits() const {
  std::size_t bits = 1;
  for (const BigInt& c : coeffs_) bits = std::max(bits, bit_length(c));
  return bits;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& a) {
  os << '[';
  for (int i = 0; i <= a.degree(); ++i) {
    if (i) os << ", ";
    os << a.coeff(i).get_str();
  }
  return os << ']';
}

Sign evaluate_sign(const IntPoly& a, const Rational& q) {
  const int d = a.degree();
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  BigInt acc = a.coeff(d);
  BigInt den_pow = 1;
  for (int i = d - 1; i >= 0; --i) {
    den_pow *= den;
    acc *= num;
    acc += a.coeff(i) * den_pow;
  }
  return sign_of(acc);
}

Sign sign_at_infinity(const IntPoly& a, bool negative_end) {
  if (a.is_zero()) return Sign::zero;
  Sign s = sign_of(a.leading());
  if (negative_end && (a.degree() % 2 != 0))
    s = s == Sign::positive ? Sign::negative : Sign::positive;
  return s;
}

int sign_variations(const IntPoly& a) {
  require_nonzero(a, "sign_variations");
  int var = 0;
  Sign prev = Sign::zero;
  for (const BigInt& c : a.coeffs()) {
    const Sign s = sign_of(c);
    if (s == Sign::zero) continue;
    if (prev != Sign::zero && s != prev) ++var;
    prev = s;
  }
  return var;
}

IntPoly taylor_shift(const IntPoly& a, const BigInt& c) {
  if (a.is_zero() || c == 0) return a;
  std::vector<BigInt> b(a.coeffs().begin(), a.coeffs().end());
  const int d = a.degree();
  if (c == 1) {
    for (int i = 0; i < d; ++i)
      for (int j = d - 1; j >= i; --j) b[j] += b[j + 1];
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = d - 1; j >= i; --j) b[j] += c * b[j + 1];
  }
  return IntPoly(std::move(b));
}

IntPoly homothety_pow2(const IntPoly& a, unsigned long beta) {
  require_nonzero(a, "homothety_pow2");
  if (beta == 0) return a;
  const int d = a.degree();
  // Smallest two-adic valuation among the scaled coefficients a_i 2^(i beta).
  unsigned long strip = 0;
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    if (a.coeff(i) == 0) continue;
    const unsigned long v =
        mpz_scan1(a.coeff(i).get_mpz_t(), 0) + static_cast<unsigned long>(i) * beta;
    if (first || v < strip) strip = v;
    first = false;
  }
  std::vector<BigInt> out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    if (a.coeff(i) == 0) continue;
    const unsigned long scaled = static_cast<unsigned long>(i) * beta;
    if (scaled >= strip) {
      mpz_mul_2exp(out[i].get_mpz_t(), a.coeff(i).get_mpz_t(), scaled - strip);
    } else {
      // strip - scaled <= v2(a_i), so the shift is exact.
      mpz_tdiv_q_2exp(out[i].get_mpz_t(), a.coeff(i).get_mpz_t(), strip - scaled);
    }
  }
  return IntPoly(std::move(out));
}

IntPoly reverse(const IntPoly& a) {
  if (a.is_zero() || a.coeff(0) == 0)
    throw std::invalid_argument("reverse: constant coefficient must be nonzero");
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  std::ranges::reverse(out);
  return IntPoly(std::move(out));
}

IntPoly invert_unit(const IntPoly& a) {
  require_nonzero(a, "invert_unit");
  IntPoly b = a.coeff(0) == 0 ? deflate_zero_roots(a).first : a;
  if (b.degree() == 0) return b;
  return taylor_shift(reverse(b), 1);
}

IntPoly negate_variable(const IntPoly& a) {
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPoly(std::move(out));
}

IntPoly negated(const IntPoly& a) {
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (BigInt& c : out) c = -c;
  return IntPoly(std::move(out));
}

std::pair<IntPoly, int> deflate_zero_roots(const IntPoly& a) {
  require_nonzero(a, "deflate_zero_roots");
  int k = 0;
  while (a.coeff(k) == 0) ++k;
  std::vector<BigInt> out(a.coeffs().begin() + k, a.coeffs().end());
  return {IntPoly(std::move(out)), k};
}

IntPoly derivative(const IntPoly& a) {
  const int d = a.degree();
  if (d == 0) return IntPoly();
  std::vector<BigInt> out(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    mpz_mul_ui(out[i - 1].get_mpz_t(), a.coeff(i).get_mpz_t(),
               static_cast<unsigned long>(i));
  }
  return IntPoly(std::move(out));
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  const int da = a.degree();
  const int db = b.degree();
  std::vector<BigInt> out(static_cast<std::size_t>(da + db) + 1);
  for (int i = 0; i <= da; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= db; ++j)
      out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return IntPoly(std::move(out));
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs().size()) out[i] += a.coeffs()[i];
    if (i < b.coeffs().size()) out[i] += b.coeffs()[i];
  }
  return IntPoly(std::move(out));
}

IntPoly subtract(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs().size()) out[i] += a.coeffs()[i];
    if (i < b.coeffs().size()) out[i] -= b.coeffs()[i];
  }
  return IntPoly(std::move(out));
}

std::pair<BigInt, IntPoly> content_and_primitive(const IntPoly& a) {
  require_nonzero(a, "content_and_primitive");
  BigInt content = 0;
  for (const BigInt& c : a.coeffs()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) break;
  }
  const bool flip = sign_of(a.leading()) == Sign::negative;
  std::vector<BigInt> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), content.get_mpz_t());
    if (flip) out[i] = -out[i];
  }
  return {std::move(content), IntPoly(std::move(out))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  require_nonzero(b, "pseudo_remainder");
  const int db = b.degree();
  if (a.is_zero() || a.degree() < db) return a;
  const BigInt& lc = b.leading();
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  int dr = a.degree();
  long e = a.degree() - db + 1;
  while (dr >= db) {
    const BigInt top = r[static_cast<std::size_t>(dr)];
    for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lc;
    for (int i = 0; i < db; ++i)
      r[static_cast<std::size_t>(dr - db + i)] -= top * b.coeff(i);
    r[static_cast<std::size_t>(dr)] = 0;
    --e;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    if (dr < 0) break;
  }
  r.resize(static_cast<std::size_t>(std::max(dr, 0)) + 1);
  IntPoly rem(std::move(r));
  if (rem.is_zero()) return rem;
  if (e > 0) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
    rem = multiply(rem, IntPoly::constant(scale));
  }
  // Total multiplier so far is lc^(deg a - deg b + 1); flip the sign when
  // that power is negative so the multiplier becomes |lc|^(...).
  const long total = a.degree() - db + 1;
  if (sign_of(lc) == Sign::negative && (total % 2 != 0)) rem = negated(rem);
  return rem;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd: both polynomials are zero");
  if (a.is_zero()) return content_and_primitive(b).second;
  if (b.is_zero()) return content_and_primitive(a).second;
  IntPoly f = content_and_primitive(a).second;
  IntPoly g = content_and_primitive(b).second;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    if (g.degree() == 0) return IntPoly::constant(1);
    IntPoly r = pseudo_remainder(f, g);
    if (!r.is_zero()) r = content_and_primitive(r).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  require_nonzero(b, "divide_exact");
  if (a.is_zero()) return IntPoly();
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) throw std::logic_error("divide_exact: not divisible");
  const BigInt& lc = b.leading();
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<BigInt> q(static_cast<std::size_t>(da - db) + 1);
  for (int k = da - db; k >= 0; --k) {
    BigInt& lead = r[static_cast<std::size_t>(k + db)];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lc.get_mpz_t()))
      throw std::logic_error("divide_exact: not divisible");
    mpz_divexact(q[static_cast<std::size_t>(k)].get_mpz_t(), lead.get_mpz_t(),
                 lc.get_mpz_t());
    for (int i = 0; i < db; ++i)
      r[static_cast<std::size_t>(k + i)] -= q[static_cast<std::size_t>(k)] * b.coeff(i);
    lead = 0;
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0)
      throw std::logic_error("divide_exact: not divisible");
  return IntPoly(std::move(q));
}

IntPoly square_free_part(const IntPoly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("square_free_part: degree >= 1 required");
  IntPoly g = gcd(a, derivative(a));
  if (g.degree() == 0) return content_and_primitive(a).second;
  return content_and_primitive(divide_exact(a, g)).second;
}

std::vector<YunFactor> yun_square_free_factorization(const IntPoly& a) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("yun_square_free_factorization: degree >= 1 required");
  const IntPoly f = content_and_primitive(a).second;
  const IntPoly fp = derivative(f);
  const IntPoly g = gcd(f, fp);
  std::vector<YunFactor> out;
  if (g.degree() == 0) {
    out.push_back({f, 1});
    return out;
  }
  IntPoly c = divide_exact(f, g);
  IntPoly d = subtract(divide_exact(fp, g), derivative(c));
  int multiplicity = 1;
  while (c.degree() > 0) {
    IntPoly p = d.is_zero() ? content_and_primitive(c).second : gcd(c, d);
    if (p.degree() > 0) out.push_back({p, multiplicity});
    c = divide_exact(c, p);
    d = subtract(divide_exact(d, p), derivative(c));
    ++multiplicity;
  }
  return out;
}

}  // namespace cfroots

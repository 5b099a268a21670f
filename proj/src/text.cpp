#include "cfroots/text.hpp"

#include <cctype>
#include <vector>

namespace cfroots {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

BigInt parse_integer(const std::string& token) {
  if (token.empty()) throw ParseError("empty integer token");
  std::size_t i = token[0] == '-' || token[0] == '+' ? 1 : 0;
  if (i == token.size()) throw ParseError("bad integer '" + token + "'");
  for (; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw ParseError("bad integer '" + token + "'");
  return BigInt(token);
}

IntPoly from_sparse(const std::vector<std::string>& tokens) {
  std::vector<BigInt> coeffs;
  std::vector<bool> seen;
  for (const std::string& token : tokens) {
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
      throw ParseError("bad sparse term '" + token + "'");
    const std::string exp_text = token.substr(0, colon);
    for (char c : exp_text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad exponent in '" + token + "'");
    if (exp_text.size() > 6) throw ParseError("exponent too large in '" + token + "'");
    const std::size_t exponent = std::stoul(exp_text);
    BigInt coeff = parse_integer(token.substr(colon + 1));
    if (exponent >= coeffs.size()) {
      coeffs.resize(exponent + 1);
      seen.resize(exponent + 1);
    }
    if (seen[exponent]) throw ParseError("duplicate exponent " + exp_text);
    seen[exponent] = true;
    coeffs[exponent] = std::move(coeff);
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_polynomial(std::string_view text) {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty polynomial");
  bool sparse = false;
  for (const std::string& t : tokens)
    if (t.find(':') != std::string::npos) sparse = true;

  IntPoly result;
  if (sparse) {
    result = from_sparse(tokens);
  } else {
    std::vector<BigInt> coeffs;
    coeffs.reserve(tokens.size());
    for (const std::string& t : tokens) coeffs.push_back(parse_integer(t));
    result = IntPoly(std::move(coeffs));
  }
  if (result.is_zero()) throw ParseError("polynomial has no nonzero coefficient");
  return result;
}

std::string format_polynomial(const IntPoly& a) {
  std::string out;
  for (int i = 0; i <= a.degree(); ++i) {
    if (i) out += ' ';
    out += a.coeff(i).get_str();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(parse_integer(s));
    BigInt num = parse_integer(s.substr(0, slash));
    BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

}  // namespace cfroots

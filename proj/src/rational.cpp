#include "chains/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace chains {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Int("025") would parse as octal; feed it a zero-stripped decimal string.
Int parse_int(const std::string& s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool negative = s[0] == '-';
  std::size_t nz = s.find_first_not_of('0', i);
  std::string body = (nz == std::string::npos) ? "0" : s.substr(nz);
  Int value(body);
  return negative ? Int(-value) : value;
}

Rational parse_decimal(const std::string& s) {
  // [sign] digits [. digits] [e|E [sign] digits]
  std::string mantissa = s;
  long exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string exppart = s.substr(epos + 1);
    if (!valid_integer(exppart)) throw std::invalid_argument("bad exponent in rational: " + s);
    exponent = std::strtol(exppart.c_str(), nullptr, 10);
    mantissa = s.substr(0, epos);
  }
  auto dot = mantissa.find('.');
  std::string digits = mantissa;
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!valid_integer(digits)) throw std::invalid_argument("bad rational literal: " + s);
  Rational value{parse_int(digits)};
  Int pow10 = 1;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) pow10 *= 10;
  if (exponent >= 0)
    value *= Rational(pow10);
  else
    value /= Rational(pow10);
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
      throw std::invalid_argument("bad rational literal: " + text);
    Int d = parse_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(parse_int(num), d);
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    return parse_decimal(s);
  if (!valid_integer(s)) throw std::invalid_argument("bad rational literal: " + text);
  return Rational(parse_int(s));
}

std::string to_fraction_string(const Rational& r) {
  Int num = numerator_of(r);
  Int den = denominator_of(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace chains

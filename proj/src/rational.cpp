#include "homopoly/rational.hpp"

#include <cctype>

namespace homopoly {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  auto read_int = [&](const char* what) -> BigInt {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0)
      throw std::invalid_argument(std::string("expected ") + what + " in rational literal '" + text + "'");
    return BigInt(text.substr(start, pos - start));
  };
  BigInt num = read_int("numerator");
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int("denominator");
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("trailing characters in rational literal '" + text + "'");
  return Rational(num, den);
}

Rational pow_rational(const Rational& base, unsigned long exp) {
  Rational result = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1UL) result *= b;
    exp >>= 1UL;
    if (exp) b *= b;
  }
  return result;
}

}  // namespace homopoly

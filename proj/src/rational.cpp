#include "hypc/rational.hpp"

#include <cctype>

namespace hypc {

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw ParseError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("sign without digits");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid integer: " + std::string(s));
  }
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: " + std::string(s));
  return Rational(num, den);
}

}  // namespace hypc

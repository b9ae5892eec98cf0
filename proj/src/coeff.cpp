#include "graphfp/coeff.hpp"

#include "graphfp/errors.hpp"

namespace graphfp {

std::string rational_to_string(const Rational& r) {
  // cpp_rational keeps itself reduced with a positive denominator.
  std::string out = numerator(r).str();
  out += '/';
  out += denominator(r).str();
  return out;
}

Rational rational_from_string(std::string_view text) {
  auto parse_int = [](std::string_view s, std::string_view whole) -> BigInt {
    if (s.empty()) {
      throw ValidationError("bad rational literal '" + std::string(whole) + "'");
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
      throw ValidationError("bad rational literal '" + std::string(whole) + "'");
    }
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw ValidationError("bad rational literal '" + std::string(whole) + "'");
      }
    }
    return BigInt(std::string(s));
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  BigInt num = parse_int(text.substr(0, slash), text);
  BigInt den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw ValidationError("zero denominator in rational literal '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace graphfp

#include "ekrw/numbers.hpp"

#include <cctype>

namespace ekrw {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational q(text, 10);  // gmp accepts "p/q"
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return q;
  }
  auto dot = text.find('.');
  auto exp = text.find_first_of("eE");
  if (dot == std::string::npos && exp == std::string::npos) {
    Rational q(text, 10);
    q.canonicalize();
    return q;
  }
  // Decimal (optionally with exponent): mantissa * 10^(exponent - frac digits).
  std::string digits;
  long shift = 0;
  std::string mantissa = exp == std::string::npos ? text : text.substr(0, exp);
  if (exp != std::string::npos) shift = std::stol(text.substr(exp + 1));
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed decimal");
      seen_dot = true;
    } else {
      if (c != '-' && c != '+' && !std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed rational: " + text);
      digits += c;
      if (seen_dot && std::isdigit(static_cast<unsigned char>(c))) --shift;
    }
  }
  Rational q{BigInt(digits, 10)};
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10,
                static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift < 0)
    q /= Rational(ten_pow);
  else
    q *= Rational(ten_pow);
  q.canonicalize();
  return q;
}

}  // namespace ekrw

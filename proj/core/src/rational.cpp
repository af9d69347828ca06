#include "sldisk/rational.hpp"

#include <cctype>

#include "sldisk/errors.hpp"

namespace sldisk {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text, true)) fail(ErrorCode::ParseError, "bad rational '" + text + "'");
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    fail(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
  Integer d(den);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Rational(Integer(num)) / Rational(d);
}

std::string format_rational(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace sldisk

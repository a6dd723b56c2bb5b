#include "msym/rational.hpp"

#include <cctype>

#include "msym/errors.hpp"

namespace msym {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ValidationError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer d = to_integer(den);
  if (d == 0) {
    throw ValidationError("zero denominator in rational \"" + std::string(text) + "\"");
  }
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

GaussianRational i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

}  // namespace msym

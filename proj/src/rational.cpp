#include "quivergrass/rational.hpp"

#include <cctype>

#include "quivergrass/error.hpp"

namespace qg {

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view s = token;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+') {
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(token) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) {
    fail(ErrorCode::ParseError, "zero denominator in rational '" + std::string(token) + "'");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str(10);
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace qg

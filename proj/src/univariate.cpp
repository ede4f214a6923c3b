#include "quivergrass/univariate.hpp"

#include <cctype>

#include "quivergrass/error.hpp"

namespace qg {

UPoly::UPoly(const Rational& constant) : c_{constant} { trim(); }

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t UPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return k;
  fail(ErrorCode::Internal, "valuation of the zero polynomial");
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + o.coeff(k);
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) - o.coeff(k);
  return UPoly(std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& s) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= s;
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::Internal, "polynomial division by zero");
  UPoly r = *this;
  std::vector<Rational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
    Rational factor = r.leading() / d.leading();
    q[shift] += factor;
    r = r - UPoly::monomial(factor, shift) * d;
  }
  return {UPoly(std::move(q)), r};
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const { return is_zero() ? *this : *this * (Rational(1) / leading()); }

UPoly UPoly::reversed(std::size_t degree) const {
  if (!is_zero() && static_cast<std::size_t>(this->degree()) > degree) fail(ErrorCode::Internal, "reversal degree too small");
  std::vector<Rational> v(degree + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) v[degree - k] = c_[k];
  return UPoly(std::move(v));
}

UPoly UPoly::shift_down(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) fail(ErrorCode::Internal, "shift would drop a nonzero coefficient");
  }
  if (k >= c_.size()) return {};
  return UPoly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

UPoly UPoly::compose_affine(const Rational& a, const Rational& b) const {
  UPoly inner(std::vector<Rational>{b, a});
  UPoly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * inner + UPoly(*it);
  return out;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += power;
    } else {
      out += format_rational(mag) + "*" + power;
    }
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) fail(ErrorCode::ParseError, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  Rational lead = den.leading();
  num_ = num * (Rational(1) / lead);
  den_ = den * (Rational(1) / lead);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) fail(ErrorCode::Internal, "division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::evaluate(const Rational& t) const {
  Rational d = den_.evaluate(t);
  if (sgn(d) == 0) fail(ErrorCode::Internal, "rational function has a pole at " + format_rational(t));
  return num_.evaluate(t) / d;
}

RationalFunction RationalFunction::compose_affine(const Rational& a, const Rational& b) const {
  return RationalFunction(num_.compose_affine(a, b), den_.compose_affine(a, b));
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == UPoly(Rational(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

class FunctionParser {
 public:
  explicit FunctionParser(const std::string& text) : s_(text) {}

  RationalFunction parse() {
    skip();
    RationalFunction out;
    UPoly num = peek() == '(' ? parenthesized() : polynomial();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      if (peek() != '(') error("expected '(' after '/'");
      out = RationalFunction(num, parenthesized());
    } else {
      out = RationalFunction(num);
    }
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return out;
  }

 private:
  UPoly parenthesized() {
    ++pos_;
    UPoly p = polynomial();
    skip();
    if (peek() != ')') error("expected ')'");
    ++pos_;
    return p;
  }

  UPoly polynomial() {
    UPoly out;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        return out;
      }
      out = out + term() * Rational(sign);
      first = false;
    }
  }

  UPoly term() {
    skip();
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      coeff = parse_rational(s_.substr(start, pos_ - start));
      have_coeff = true;
      skip();
      if (peek() != '*') return UPoly(coeff);
      ++pos_;
      skip();
    }
    if (peek() != 't') {
      if (have_coeff) error("expected the variable after '*'");
      error("expected a coefficient or the variable");
    }
    ++pos_;
    if (s_.compare(pos_, 2, "au") == 0) pos_ += 2;
    std::size_t exponent = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) error("expected an exponent");
      exponent = std::stoul(s_.substr(start, pos_ - start));
    }
    return UPoly::monomial(coeff, exponent);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) { return FunctionParser(text).parse(); }

}  // namespace qg

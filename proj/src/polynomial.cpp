#include "quivergrass/polynomial.hpp"

#include <cctype>

#include "quivergrass/error.hpp"

namespace qg {

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(var, exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) return fa[i].first > fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
    ++i;
    ++j;
  }
  return i == fa.size() && j < fb.size();
}

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::variable(std::uint32_t var) { return term(Rational(1), Monomial::variable(var)); }

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
  Polynomial p;
  p.add_term(m, coeff);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

std::uint32_t Polynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::uint32_t Polynomial::variable_bound() const {
  std::uint32_t bound = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) bound = std::max(bound, f.first + 1);
  return bound;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const { return Polynomial(*this) += other; }
Polynomial Polynomial::operator-(const Polynomial& other) const { return Polynomial(*this) -= other; }
Polynomial Polynomial::operator*(const Rational& scalar) const { return Polynomial(*this) *= scalar; }
Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [var, exp] : m.factors()) {
      if (var >= point.size()) fail(ErrorCode::MissingCoordinate, "no value for X[" + std::to_string(var) + "]");
      Rational power = 1;
      for (std::uint32_t k = 0; k < exp; ++k) power *= point[var];
      value *= power;
    }
    total += value;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = sgn(it->second) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(it->second);
    std::string body = magnitude == 1 && !it->first.factors().empty() ? "" : format_rational(magnitude);
    for (const auto& [var, exp] : it->first.factors()) {
      if (!body.empty()) body += " * ";
      body += "X[" + std::to_string(var) + "]";
      if (exp > 1) body += "^" + std::to_string(exp);
    }
    out += body;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      const Polynomial t = parse_term();
      if (negative) {
        out -= t;
      } else {
        out += t;
      }
      skip();
      if (pos_ == s_.size()) return out;
      if (peek() != '+' && peek() != '-') error("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
  }

 private:
  Polynomial parse_term() {
    skip();
    Rational coeff = 1;
    Monomial m;
    bool first = true;
    while (true) {
      skip();
      if (peek() == 'X') {
        ++pos_;
        expect('[');
        const auto var = static_cast<std::uint32_t>(number());
        expect(']');
        std::uint32_t exp = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          exp = static_cast<std::uint32_t>(number());
        }
        m = m * Monomial::variable(var, exp);
      } else if (first) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        if (start == pos_) error("expected a coefficient or variable");
        coeff = parse_rational(s_.substr(start, pos_ - start));
      } else {
        error("expected a variable");
      }
      first = false;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return Polynomial::term(coeff, m);
  }

  unsigned long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace qg

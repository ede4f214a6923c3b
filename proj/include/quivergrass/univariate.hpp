#pragma once

#include <string>
#include <vector>

#include "quivergrass/rational.hpp"

namespace qg {

// Univariate polynomial with rational coefficients, lowest degree first and
// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  // Smallest k with a nonzero coefficient; the zero polynomial has none.
  std::size_t valuation() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& s) const;
  UPoly operator-() const { return *this * Rational(-1); }

  // Euclidean division; raises on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  Rational evaluate(const Rational& x) const;
  UPoly monic() const;
  // x^degree * p(1/x) for degree >= deg p.
  UPoly reversed(std::size_t degree) const;
  // Divides by x^k; the low coefficients must vanish.
  UPoly shift_down(std::size_t k) const;
  // p(a x + b)
  UPoly compose_affine(const Rational& a, const Rational& b) const;

  std::string to_string(const std::string& var = "t") const;

  bool operator==(const UPoly&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);

// Quotient of polynomials in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const UPoly& num) : num_(num), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(UPoly num, UPoly den);

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;

  Rational evaluate(const Rational& t) const;
  RationalFunction compose_affine(const Rational& a, const Rational& b) const;

  // "(P)/(Q)", or just P when the denominator is 1.
  std::string to_string(const std::string& var = "t") const;

  bool operator==(const RationalFunction&) const = default;

 private:
  UPoly num_;
  UPoly den_;
};

// Accepts literals such as "3*t^2 + 1", "-t", "1/2*t", "(3*t^2+1)/(t)";
// the variable may be spelled t or tau.
RationalFunction parse_rational_function(const std::string& text);

}  // namespace qg

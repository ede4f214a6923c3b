#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quivergrass/rational.hpp"

namespace qg {

// Sparse exponent vector: (variable, exponent) pairs, sorted by variable,
// exponents positive.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::uint32_t var, std::uint32_t exponent = 1);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const { return factors_; }
  std::uint32_t degree() const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

// Graded lexicographic order with X0 > X1 > ...
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial over the rationals in variables X0, X1, ...
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(std::uint32_t var);
  static Polynomial term(const Rational& coeff, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t degree() const;
  // Largest variable index used plus one.
  std::uint32_t variable_bound() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial operator-() const;

  // Evaluates at a point given for every variable index below variable_bound().
  Rational evaluate(const std::vector<Rational>& point) const;

  // "coeff * X[i]^e * X[j] + ..." with terms in decreasing order; "0" for zero.
  std::string to_string() const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

// Parses the format produced by Polynomial::to_string.
Polynomial parse_polynomial(const std::string& text);

}  // namespace qg

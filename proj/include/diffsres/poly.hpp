#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffsres/symbol.hpp"

namespace diffsres {

// Exact rational; mpq_class keeps numerator/denominator coprime with a
// positive denominator once canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Power product of symbols. Factors are kept sorted by symbol (greatest
// variable first) with strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;
  // Inline storage: most monomials have few distinct variables.
  using Factors = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  static Monomial var(Symbol s, unsigned exponent = 1);

  const Factors& factors() const { return factors_; }
  unsigned total_degree() const { return degree_; }
  unsigned degree(Symbol s) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(Symbol s) const;
  // Greatest common divisor of two power products.
  Monomial meet(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string() const;

 private:
  Factors factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic comparison: negative, zero or positive.
int grlex_compare(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q. Terms are sorted by decreasing
// grlex order; no stored coefficient is zero.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(Symbol s, unsigned exponent = 1);
  static MultiPoly term(Monomial m, Rational c);
  // Sorts and merges arbitrary terms.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  Rational constant_value() const;   // requires is_constant()
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  unsigned degree(Symbol s) const;
  unsigned total_degree() const;
  bool contains(Symbol s) const;
  std::vector<Symbol> variables() const;
  // Minimum exponent of s over all terms.
  unsigned min_degree(Symbol s) const;
  bool has_integer_coefficients() const;

  // Coefficients with respect to s, ascending; each is free of s.
  std::vector<MultiPoly> coefficients_in(Symbol s) const;
  static MultiPoly from_coefficients(Symbol s, std::span<const MultiPoly> coeffs);

  MultiPoly partial(Symbol s) const;
  MultiPoly mul_monomial(const Monomial& m, const Rational& c) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(MultiPoly a, long c) { return a *= Rational(c); }
  friend MultiPoly operator*(long c, MultiPoly a) { return a *= Rational(c); }
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  // Plain text: "3*x^2*y - 1/2*z + 4".
  std::string to_string() const;

 private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, int sign);
  std::vector<Term> terms_;
};

}  // namespace diffsres

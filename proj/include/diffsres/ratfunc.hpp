#pragma once

#include <string>

#include "diffsres/poly.hpp"

namespace diffsres {

// Reduced fraction of multivariate polynomials over Q. The denominator is
// integer-primitive with a positive leading coefficient and
// gcd(numerator, denominator) = 1; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(MultiPoly(c)) {}             // NOLINT(google-explicit-constructor)

  // Reduces by gcd and normalizes; throws DivisionByZero for den = 0.
  static RatFunc fraction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string() const;

 private:
  // Scales so that the denominator is integer-primitive with positive lc.
  static RatFunc finish(MultiPoly num, MultiPoly den);
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace diffsres

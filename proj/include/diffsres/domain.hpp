#pragma once

#include <memory>
#include <string>
#include <vector>

#include "diffsres/poly.hpp"
#include "diffsres/ratfunc.hpp"

namespace diffsres {

enum class DomainKind { rational_functions, diff_polynomials, weierstrass };

class Domain;
using DomainPtr = std::shared_ptr<const Domain>;

// Describes a differential coefficient field: which symbols may occur and
// what the derivation does to each of them. Immutable once built.
//
//   main variable           d/dx x = 1
//   constant parameters     derivative 0 (lambda, mu, g2, g3, ...)
//   differential indets     a^[k] -> a^[k+1], jets created on demand
//   weierstrass kind        wp -> wpp, wpp -> 6 wp^2 - g2/2,
//                           with wpp^2 = 4 wp^3 - g2 wp - g3
class Domain {
 public:
  static DomainPtr rational_functions(Symbol main, std::vector<Symbol> params = {});
  static DomainPtr diff_polynomials(Symbol main, std::vector<Symbol> indeterminates,
                                    std::vector<Symbol> params = {});
  static DomainPtr weierstrass(Symbol main, std::vector<Symbol> params = {});

  static Symbol wp();
  static Symbol wpp();
  static Symbol g2();
  static Symbol g3();

  DomainKind kind() const { return kind_; }
  Symbol main_variable() const { return main_; }
  // Declared constant parameters (for weierstrass this includes g2, g3).
  const std::vector<Symbol>& parameters() const { return params_; }
  const std::vector<Symbol>& indeterminates() const { return indets_; }

  // Copy with additional constant parameters (already-present ones skipped).
  DomainPtr with_parameters(const std::vector<Symbol>& extra) const;

  bool is_parameter(Symbol s) const;
  bool allows(Symbol s) const;
  // Symbols whose derivative is zero.
  bool is_constant_symbol(Symbol s) const;

  // Derivative of one generator; throws UnknownSymbol for foreign symbols.
  MultiPoly derivative_of(Symbol s) const;
  // Derivation extended to polynomials (sum of partials times generator images).
  MultiPoly derive(const MultiPoly& p) const;
  // Weierstrass relation applied until degree in wpp is at most one;
  // identity for the other kinds.
  MultiPoly reduce(const MultiPoly& p) const;
  // Exact division in the coefficient ring, including quotients by elements
  // that involve wpp (via the conjugate norm).
  MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) const;
  // Canonical fraction for this domain.
  RatFunc canonical(MultiPoly num, MultiPoly den) const;

  // Textual form accepted by the CLI --domain flag.
  std::string spec() const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  Domain(DomainKind kind, Symbol main, std::vector<Symbol> params, std::vector<Symbol> indets);
  void validate() const;

  DomainKind kind_;
  Symbol main_;
  std::vector<Symbol> params_;
  std::vector<Symbol> indets_;
};

bool same_domain(const DomainPtr& a, const DomainPtr& b);

// Element of a domain's fraction field, held in canonical form so that
// equality and zero testing are structural.
class Element {
 public:
  Element(DomainPtr domain, RatFunc value);

  static Element zero(DomainPtr domain);
  static Element one(DomainPtr domain);
  static Element constant(DomainPtr domain, const Rational& c);
  // Throws UnknownSymbol when the symbol is not allowed in the domain.
  static Element symbol(DomainPtr domain, Symbol s);

  const DomainPtr& domain() const { return domain_; }
  const RatFunc& value() const { return value_; }
  const MultiPoly& num() const { return value_.num(); }
  const MultiPoly& den() const { return value_.den(); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_.num().is_one() && value_.den().is_one(); }
  bool is_rational_constant() const { return value_.is_constant(); }
  // Derivative vanishes (only constant symbols occur).
  bool is_constant() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  Element scaled(const Rational& c) const;
  Element pow(unsigned e) const;

  Element inverse() const;
  Element derive() const;
  // Same value viewed in a domain that admits all of its symbols.
  Element lift(DomainPtr target) const;

  friend bool operator==(const Element& a, const Element& b) { return a.value_ == b.value_; }

  std::string to_string() const;

 private:
  struct Trusted {};
  Element(DomainPtr domain, RatFunc value, Trusted) : domain_(std::move(domain)), value_(std::move(value)) {}
  DomainPtr domain_;
  RatFunc value_;
};

// Stand-alone polynomial rewrite (wpp)^2 -> 4 wp^3 - g2 wp - g3.
MultiPoly reduce_weierstrass(const MultiPoly& p);

}  // namespace diffsres

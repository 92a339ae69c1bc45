#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "diffsres/operator.hpp"

namespace diffsres {

struct SourcePos {
  int line = 1;
  int column = 1;
};

// Operator expression tree. Multiplication is the Ore product; division is
// right multiplication by the inverse of an order-0 operand.
struct Expr {
  enum class Kind { integer, symbol, add, sub, mul, div, pow, neg, paren };
  Kind kind;
  SourcePos pos;
  std::string text;  // digits or identifier (D<var> is resolved against the domain)
  unsigned exponent = 0;
  std::vector<std::unique_ptr<Expr>> children;
};

std::unique_ptr<Expr> parse_expression(std::string_view src);
Odo evaluate(const Expr& e, const DomainPtr& domain);
Odo parse_operator(std::string_view src, const DomainPtr& domain);

// ratfunc(x), ratfunc(x; params=lambda,mu), diffpoly(x; inds=a0..a2,b0..b3),
// weierstrass(x; params=lambda,mu). Throws SyntaxError.
DomainPtr parse_domain(std::string_view spec);

}  // namespace diffsres

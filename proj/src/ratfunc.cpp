#include "diffsres/ratfunc.hpp"

#include "diffsres/errors.hpp"
#include "diffsres/poly_gcd.hpp"

namespace diffsres {

RatFunc RatFunc::finish(MultiPoly num, MultiPoly den) {
  RatFunc r;
  if (num.is_zero()) return r;
  auto [c, prim] = integer_primitive(den);
  r.den_ = std::move(prim);
  r.num_ = c == 1 ? std::move(num) : num * Rational(1 / c);
  return r;
}

RatFunc RatFunc::fraction(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) return {};
  if (!den.is_constant()) {
    MultiPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  return finish(std::move(num), std::move(den));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
    return RatFunc::fraction(a.num_ + b.num_, a.den_);
  }
  MultiPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    // Coprime denominators: the sum is already reduced.
    return RatFunc::finish(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  MultiPoly ad = divide_exact(a.den_, g);
  MultiPoly bd = divide_exact(b.den_, g);
  MultiPoly num = a.num_ * bd + b.num_ * ad;
  MultiPoly den = ad * b.den_;
  if (num.is_zero()) return {};
  MultiPoly h = gcd(num, g);
  if (!h.is_one()) {
    num = divide_exact(num, h);
    den = divide_exact(den, h);
  }
  return RatFunc::finish(std::move(num), std::move(den));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  MultiPoly g1 = gcd(a.num_, b.den_);
  MultiPoly g2 = gcd(b.num_, a.den_);
  MultiPoly an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
  MultiPoly bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
  MultiPoly bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
  MultiPoly ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
  return RatFunc::finish(an * bn, ad * bd);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return finish(den_, num_);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace diffsres

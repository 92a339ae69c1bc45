#include "diffsres/domain.hpp"

#include <algorithm>
#include <set>

#include "diffsres/errors.hpp"
#include "diffsres/poly_gcd.hpp"

namespace diffsres {

namespace {

// 4 wp^3 - g2 wp - g3
const MultiPoly& weierstrass_cubic() {
  static const MultiPoly r = MultiPoly(4) * MultiPoly::variable(Domain::wp(), 3) -
                             MultiPoly::variable(Domain::g2()) * MultiPoly::variable(Domain::wp()) -
                             MultiPoly::variable(Domain::g3());
  return r;
}

std::string join(const std::vector<Symbol>& syms) {
  std::string out;
  for (Symbol s : syms) {
    if (!out.empty()) out += ',';
    out += s.name();
  }
  return out;
}

}  // namespace

MultiPoly reduce_weierstrass(const MultiPoly& p) {
  const Symbol w = Domain::wpp();
  if (p.degree(w) <= 1) return p;
  std::vector<MultiPoly> c = p.coefficients_in(w);
  MultiPoly even;
  MultiPoly odd;
  MultiPoly power(1);
  for (std::size_t k = 0; k < c.size(); k += 2) {
    if (k > 0) power = power * weierstrass_cubic();
    even += c[k] * power;
    if (k + 1 < c.size()) odd += c[k + 1] * power;
  }
  return even + odd * MultiPoly::variable(w);
}

// ------------------------------------------------------------------ Domain

Symbol Domain::wp() {
  static const Symbol s("wp");
  return s;
}
Symbol Domain::wpp() {
  static const Symbol s("wpp");
  return s;
}
Symbol Domain::g2() {
  static const Symbol s("g2");
  return s;
}
Symbol Domain::g3() {
  static const Symbol s("g3");
  return s;
}

Domain::Domain(DomainKind kind, Symbol main, std::vector<Symbol> params, std::vector<Symbol> indets)
    : kind_(kind), main_(main), params_(std::move(params)), indets_(std::move(indets)) {
  validate();
}

void Domain::validate() const {
  if (!main_.valid() || main_.jet_order() != 0) {
    throw Error(ErrorCode::SyntaxError, "invalid main variable");
  }
  std::set<std::string> names{main_.name()};
  auto claim = [&](Symbol s) {
    if (s.jet_order() != 0) throw Error(ErrorCode::SyntaxError, "symbol '" + s.name() + "' may not carry primes");
    if (!names.insert(s.name()).second) {
      throw Error(ErrorCode::DomainMismatch, "symbol '" + s.name() + "' declared twice");
    }
  };
  if (kind_ == DomainKind::weierstrass) {
    claim(wp());
    claim(wpp());
  }
  for (Symbol s : params_) claim(s);
  for (Symbol s : indets_) claim(s);
}

DomainPtr Domain::rational_functions(Symbol main, std::vector<Symbol> params) {
  return DomainPtr(new Domain(DomainKind::rational_functions, main, std::move(params), {}));
}

DomainPtr Domain::diff_polynomials(Symbol main, std::vector<Symbol> indeterminates, std::vector<Symbol> params) {
  return DomainPtr(new Domain(DomainKind::diff_polynomials, main, std::move(params), std::move(indeterminates)));
}

DomainPtr Domain::weierstrass(Symbol main, std::vector<Symbol> params) {
  std::vector<Symbol> all{g2(), g3()};
  for (Symbol s : params) {
    if (s != g2() && s != g3()) all.push_back(s);
  }
  return DomainPtr(new Domain(DomainKind::weierstrass, main, std::move(all), {}));
}

DomainPtr Domain::with_parameters(const std::vector<Symbol>& extra) const {
  std::vector<Symbol> params = params_;
  for (Symbol s : extra) {
    if (std::find(params.begin(), params.end(), s) == params.end()) params.push_back(s);
  }
  return DomainPtr(new Domain(kind_, main_, std::move(params), indets_));
}

bool Domain::is_parameter(Symbol s) const { return std::find(params_.begin(), params_.end(), s) != params_.end(); }

bool Domain::allows(Symbol s) const {
  if (s == main_ || is_parameter(s)) return true;
  if (kind_ == DomainKind::weierstrass && (s == wp() || s == wpp())) return true;
  if (kind_ == DomainKind::diff_polynomials) {
    Symbol base = s.base_symbol();
    return std::find(indets_.begin(), indets_.end(), base) != indets_.end();
  }
  return false;
}

bool Domain::is_constant_symbol(Symbol s) const { return is_parameter(s); }

MultiPoly Domain::derivative_of(Symbol s) const {
  if (s == main_) return MultiPoly(1);
  if (is_parameter(s)) return MultiPoly();
  if (kind_ == DomainKind::weierstrass) {
    if (s == wp()) return MultiPoly::variable(wpp());
    if (s == wpp()) {
      return MultiPoly(6) * MultiPoly::variable(wp(), 2) - Rational(1, 2) * MultiPoly::variable(g2());
    }
  }
  if (kind_ == DomainKind::diff_polynomials && allows(s)) return MultiPoly::variable(s.next_jet());
  throw Error(ErrorCode::UnknownSymbol, "symbol '" + s.name() + "' is not part of domain " + spec());
}

MultiPoly Domain::derive(const MultiPoly& p) const {
  MultiPoly out;
  for (Symbol v : p.variables()) {
    MultiPoly dv = derivative_of(v);
    if (dv.is_zero()) continue;
    out += p.partial(v) * dv;
  }
  return out;
}

MultiPoly Domain::reduce(const MultiPoly& p) const {
  return kind_ == DomainKind::weierstrass ? reduce_weierstrass(p) : p;
}

MultiPoly Domain::divide_exact(const MultiPoly& a, const MultiPoly& b) const {
  if (kind_ != DomainKind::weierstrass || !b.contains(wpp())) return diffsres::divide_exact(a, b);
  // a / (b0 + b1 w) = a (b0 - b1 w) / (b0^2 - b1^2 R)
  std::vector<MultiPoly> bc = b.coefficients_in(wpp());
  MultiPoly w = MultiPoly::variable(wpp());
  MultiPoly conj = bc[0] - bc[1] * w;
  MultiPoly norm = bc[0] * bc[0] - bc[1] * bc[1] * weierstrass_cubic();
  return diffsres::divide_exact(reduce(a * conj), norm);
}

RatFunc Domain::canonical(MultiPoly num, MultiPoly den) const {
  if (kind_ != DomainKind::weierstrass) return RatFunc::fraction(std::move(num), std::move(den));
  num = reduce(num);
  den = reduce(den);
  if (den.contains(wpp())) {
    std::vector<MultiPoly> dc = den.coefficients_in(wpp());
    MultiPoly conj = dc[0] - dc[1] * MultiPoly::variable(wpp());
    num = reduce(num * conj);
    den = dc[0] * dc[0] - dc[1] * dc[1] * weierstrass_cubic();
  }
  return RatFunc::fraction(std::move(num), std::move(den));
}

std::string Domain::spec() const {
  std::string out;
  std::vector<Symbol> shown;
  switch (kind_) {
    case DomainKind::rational_functions:
      out = "ratfunc(";
      shown = params_;
      break;
    case DomainKind::diff_polynomials:
      out = "diffpoly(";
      shown = params_;
      break;
    case DomainKind::weierstrass:
      out = "weierstrass(";
      for (Symbol s : params_) {
        if (s != g2() && s != g3()) shown.push_back(s);
      }
      break;
  }
  out += main_.name();
  if (!indets_.empty()) out += "; inds=" + join(indets_);
  if (!shown.empty()) out += "; params=" + join(shown);
  return out + ")";
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.kind_ != b.kind_ || a.main_ != b.main_) return false;
  auto sorted = [](std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(a.params_) == sorted(b.params_) && sorted(a.indets_) == sorted(b.indets_);
}

bool same_domain(const DomainPtr& a, const DomainPtr& b) { return a == b || (a && b && *a == *b); }

// ----------------------------------------------------------------- Element

namespace {

void require_same(const Element& a, const Element& b) {
  if (!same_domain(a.domain(), b.domain())) {
    throw Error(ErrorCode::DomainMismatch, a.domain()->spec() + " vs " + b.domain()->spec());
  }
}

void check_symbols(const Domain& d, const MultiPoly& p) {
  for (Symbol s : p.variables()) {
    if (!d.allows(s)) throw Error(ErrorCode::UnknownSymbol, "symbol '" + s.name() + "' is not part of domain " + d.spec());
  }
}

}  // namespace

Element::Element(DomainPtr domain, RatFunc value) : domain_(std::move(domain)) {
  if (domain_->kind() == DomainKind::weierstrass) {
    value_ = domain_->canonical(value.num(), value.den());
  } else {
    value_ = std::move(value);
  }
}

Element Element::zero(DomainPtr domain) { return Element(std::move(domain), RatFunc(), Trusted{}); }
Element Element::one(DomainPtr domain) { return Element(std::move(domain), RatFunc(1), Trusted{}); }

Element Element::constant(DomainPtr domain, const Rational& c) {
  return Element(std::move(domain), RatFunc(MultiPoly(c)), Trusted{});
}

Element Element::symbol(DomainPtr domain, Symbol s) {
  if (!domain->allows(s)) {
    throw Error(ErrorCode::UnknownSymbol, "symbol '" + s.name() + "' is not part of domain " + domain->spec());
  }
  return Element(std::move(domain), RatFunc(MultiPoly::variable(s)), Trusted{});
}

bool Element::is_constant() const {
  for (Symbol s : num().variables()) {
    if (!domain_->is_constant_symbol(s)) return false;
  }
  for (Symbol s : den().variables()) {
    if (!domain_->is_constant_symbol(s)) return false;
  }
  return true;
}

Element Element::operator-() const { return Element(domain_, -value_, Trusted{}); }

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  // Sums keep a wpp-free denominator and a numerator linear in wpp.
  return Element(a.domain_, a.value_ + b.value_, Element::Trusted{});
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.domain_, a.value_ - b.value_, Element::Trusted{});
}

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  RatFunc v = a.value_ * b.value_;
  if (a.domain_->kind() == DomainKind::weierstrass && v.num().degree(Domain::wpp()) > 1) {
    return Element(a.domain_, RatFunc::fraction(reduce_weierstrass(v.num()), v.den()), Element::Trusted{});
  }
  return Element(a.domain_, std::move(v), Element::Trusted{});
}

Element Element::scaled(const Rational& c) const {
  return Element(domain_, RatFunc::fraction(num() * c, den()), Trusted{});
}

Element Element::pow(unsigned e) const {
  Element r = one(domain_);
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (domain_->kind() == DomainKind::weierstrass && num().contains(Domain::wpp())) {
    return Element(domain_, domain_->canonical(den(), num()), Trusted{});
  }
  return Element(domain_, value_.inverse(), Trusted{});
}

Element Element::derive() const {
  const Domain& d = *domain_;
  MultiPoly dn = d.derive(num());
  if (den().is_one()) {
    if (d.kind() == DomainKind::weierstrass) return Element(domain_, RatFunc(d.reduce(dn)), Trusted{});
    return Element(domain_, RatFunc(std::move(dn)), Trusted{});
  }
  MultiPoly dd = d.derive(den());
  // (n/q)' = (n' q - n q') / q^2, reduced against q first to keep sizes small.
  MultiPoly g = gcd(den(), dd);
  MultiPoly q_over_g = diffsres::divide_exact(den(), g);
  MultiPoly dd_over_g = diffsres::divide_exact(dd, g);
  MultiPoly numer = dn * q_over_g - num() * dd_over_g;
  MultiPoly denom = den() * q_over_g;
  return Element(domain_, d.canonical(std::move(numer), std::move(denom)), Trusted{});
}

Element Element::lift(DomainPtr target) const {
  if (same_domain(domain_, target)) return Element(std::move(target), value_, Trusted{});
  check_symbols(*target, num());
  check_symbols(*target, den());
  return Element(std::move(target), value_);
}

std::string Element::to_string() const {
  const MultiPoly& n = num();
  const MultiPoly& d = den();
  if (d.is_one()) return n.to_string();
  std::string top = n.is_monomial() ? n.to_string() : "(" + n.to_string() + ")";
  bool bare = d.is_monomial() && d.leading_term().first.factors().size() == 1;
  std::string bottom = bare ? d.to_string() : "(" + d.to_string() + ")";
  return top + "/" + bottom;
}

}  // namespace diffsres

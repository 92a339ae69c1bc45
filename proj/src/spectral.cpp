#include "diffsres/spectral.hpp"

#include <algorithm>

#include "diffsres/errors.hpp"
#include "diffsres/poly_gcd.hpp"

namespace diffsres {

Symbol lambda_symbol() {
  static const Symbol s("lambda");
  return s;
}

Symbol mu_symbol() {
  static const Symbol s("mu");
  return s;
}

namespace {

// Polynomials in the curve variable with field coefficients, ascending.
using VPoly = std::vector<Element>;

void trim(VPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

VPoly to_vpoly(const DomainPtr& dom, const MultiPoly& p, Symbol v) {
  VPoly out;
  for (auto& c : p.coefficients_in(v)) out.emplace_back(dom, RatFunc(std::move(c)));
  trim(out);
  return out;
}

VPoly vmul(const VPoly& a, const VPoly& b) {
  if (a.empty() || b.empty()) return {};
  VPoly out(a.size() + b.size() - 1, Element::zero(a.front().domain()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

VPoly vsub(VPoly a, const VPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Element::zero(b.front().domain()));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q b + r over the coefficient field.
std::pair<VPoly, VPoly> vdivmod(VPoly a, const VPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, std::move(a)};
  const Element inv = b.back().inverse();
  VPoly q(a.size() - b.size() + 1, Element::zero(b.front().domain()));
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    const Element t = a[k] * inv;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
  }
  a.resize(b.size() - 1, Element::zero(b.front().domain()));
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

struct CurveContext {
  Symbol var;  // monic variable
  VPoly f;     // curve polynomial in var, monic
};

CurveContext curve_context(const DomainPtr& dom, const SpectralCurve& curve) {
  for (Symbol v : {curve.mu, curve.lambda}) {
    if (curve.f.degree(v) == 0) continue;
    MultiPoly lead = curve.f.coefficients_in(v).back();
    if (!lead.is_constant()) continue;
    VPoly f = to_vpoly(dom, curve.f, v);
    const Element inv = f.back().inverse();
    for (auto& c : f) c *= inv;
    return {v, std::move(f)};
  }
  throw Error(ErrorCode::NotMonicInEitherVariable, curve.f.to_string());
}

// Inverse of d modulo f; d already reduced and nonzero.
VPoly invert_mod(const VPoly& d, const VPoly& f) {
  if (d.size() == 1) return {d.front().inverse()};
  VPoly r0 = f, r1 = d;
  VPoly s0, s1{Element::one(d.front().domain())};
  while (r1.size() > 1) {
    auto [q, r] = vdivmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    VPoly s = vsub(s0, vmul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::DenominatorInIdeal, "denominator shares a factor with the curve");
  const Element inv = r1.front().inverse();
  for (auto& c : s1) c *= inv;
  return s1;
}

void check_not_spectral(const Odo& a) {
  for (const auto& c : a.coefficients()) {
    for (Symbol s : {lambda_symbol(), mu_symbol()}) {
      if (c.value().contains(s)) {
        throw Error(ErrorCode::DomainMismatch, "operator already involves " + s.name());
      }
    }
  }
}

void require_commuting(const Odo& a, const Odo& b) {
  if (!same_domain(a.domain(), b.domain())) {
    throw Error(ErrorCode::DomainMismatch, a.domain()->spec() + " vs " + b.domain()->spec());
  }
  Odo c = commutator(a, b);
  if (!c.is_zero()) {
    throw Error(ErrorCode::NotCommuting, "commutator has order " + std::to_string(c.order()));
  }
}

std::pair<Odo, Odo> shifted_pair(const Odo& a, const Odo& b) {
  check_not_spectral(a);
  check_not_spectral(b);
  DomainPtr dom = spectral_domain(a.domain());
  return {shift_by_parameter(a.lift(dom), lambda_symbol()), shift_by_parameter(b.lift(dom), mu_symbol())};
}

}  // namespace

DomainPtr spectral_domain(const DomainPtr& base) { return base->with_parameters({lambda_symbol(), mu_symbol()}); }

Odo shift_by_parameter(const Odo& a, Symbol p) {
  if (!a.domain()->is_parameter(p)) {
    throw Error(ErrorCode::UnknownParameter, p.name() + " is not a parameter of " + a.domain()->spec());
  }
  return a - Odo::scalar(Element::symbol(a.domain(), p));
}

Element bc_resultant(const Odo& a, const Odo& b, Execution exec) {
  require_commuting(a, b);
  auto [al, bm] = shifted_pair(a, b);
  Element h = resultant(al, bm, exec);
  if (h.is_zero()) throw Error(ErrorCode::NonConstantResultant, "resultant vanishes");
  if (!h.is_constant() || h.den().contains(lambda_symbol()) || h.den().contains(mu_symbol())) {
    throw Error(ErrorCode::NonConstantResultant, h.to_string());
  }
  return h;
}

MultiPoly squarefree_part(const MultiPoly& h, Symbol lambda, Symbol mu) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroInput, "square-free part of 0");
  MultiPoly g = gcd(h, gcd(h.partial(lambda), h.partial(mu)));
  return integer_primitive(divide_exact(h, g)).second;
}

Element reduce_mod_curve(const Element& e, const SpectralCurve& curve) {
  const DomainPtr& dom = e.domain();
  CurveContext ctx = curve_context(dom, curve);
  const Symbol v = ctx.var;
  auto reduce = [&](VPoly p) { return p.size() < ctx.f.size() ? p : vdivmod(std::move(p), ctx.f).second; };
  VPoly num = reduce(to_vpoly(dom, e.num(), v));
  if (num.empty()) return Element::zero(dom);
  VPoly den = reduce(to_vpoly(dom, e.den(), v));
  if (den.empty()) throw Error(ErrorCode::DenominatorInIdeal, e.den().to_string() + " vanishes on the curve");
  VPoly r = reduce(vmul(num, invert_mod(den, ctx.f)));
  Element out = Element::zero(dom);
  const Element x = Element::symbol(dom, v);
  for (std::size_t k = r.size(); k-- > 0;) out = out * x + r[k];
  return out;
}

Odo reduce_mod_curve(const Odo& a, const SpectralCurve& curve) {
  return a.map_coefficients(a.domain(), [&](const Element& c) { return reduce_mod_curve(c, curve); });
}

Odo monic_on_curve(const Odo& a, const SpectralCurve& curve) {
  Odo r = reduce_mod_curve(a, curve);
  const Element inv = reduce_mod_curve(r.leading_coefficient().inverse(), curve);
  return r.map_coefficients(r.domain(), [&](const Element& c) { return reduce_mod_curve(c * inv, curve); });
}

DivisionResult right_divide_on_curve(const Odo& a, const Odo& b, const SpectralCurve& curve) {
  Odo div = reduce_mod_curve(b, curve);
  if (div.is_zero()) throw Error(ErrorCode::DivisionByZeroOperator, "divisor vanishes on the curve");
  const Element inv = reduce_mod_curve(div.leading_coefficient().inverse(), curve);
  Odo r = reduce_mod_curve(a, curve);
  Odo q(a.domain());
  while (!r.is_zero() && r.order() >= div.order()) {
    const int before = r.order();
    const auto k = static_cast<unsigned>(r.order() - div.order());
    Element c = reduce_mod_curve(r.leading_coefficient() * inv, curve);
    q = q + Odo::monomial(c, k);
    r = reduce_mod_curve(r - div.left_mul_dpow(k).scaled_left(c), curve);
    if (r.order() >= before) throw Error(ErrorCode::VerificationFailed, "division on the curve did not progress");
  }
  return {std::move(q), std::move(r)};
}

CommutingPair make_commuting_pair(const Odo& a, const Odo& b, Execution exec) {
  Element h = bc_resultant(a, b, exec);
  SpectralCurve curve{squarefree_part(h.num()), lambda_symbol(), mu_symbol()};
  return {a, b, std::move(h), std::move(curve)};
}

CurveGcrd gcrd_on_curve(const Odo& a, const Odo& b, Execution exec) {
  return gcrd_on_curve(make_commuting_pair(a, b, exec), exec);
}

CurveGcrd gcrd_on_curve(const CommutingPair& pair, Execution exec) {
  auto [al, bm] = shifted_pair(pair.a, pair.b);
  const int count = std::min(al.order(), bm.order());
  for (int i = 0; i < count; ++i) {
    Odo r = reduce_mod_curve(subresultant(al, bm, i, exec).op, pair.curve);
    if (!r.is_zero()) return {i, monic_on_curve(r, pair.curve), pair.curve};
  }
  // No subresultant survives: the lower-order operator divides the other on the curve.
  const bool a_low = al.order() <= bm.order();
  Odo g = monic_on_curve(a_low ? al : bm, pair.curve);
  if (!right_divide_on_curve(a_low ? bm : al, g, pair.curve).remainder.is_zero()) {
    throw Error(ErrorCode::VerificationFailed, "no subresultant survives and the operators do not divide");
  }
  const int d = g.order();
  return {d, std::move(g), pair.curve};
}

Odo substitute_parametrization(const Odo& a, const std::map<Symbol, Element>& assignments) {
  if (assignments.empty()) return a;
  const DomainPtr target = assignments.begin()->second.domain();
  for (const auto& [sym, value] : assignments) {
    if (!a.domain()->is_parameter(sym)) {
      throw Error(ErrorCode::UnknownParameter, sym.name() + " is not a parameter of " + a.domain()->spec());
    }
    if (!same_domain(value.domain(), target)) {
      throw Error(ErrorCode::DomainMismatch, "substitution values live in different domains");
    }
    if (!value.is_constant()) {
      throw Error(ErrorCode::NonConstantValue, sym.name() + " -> " + value.to_string() + " is not constant");
    }
  }
  if (target->main_variable() != a.domain()->main_variable()) {
    throw Error(ErrorCode::DomainMismatch, a.domain()->spec() + " vs " + target->spec());
  }
  auto eval = [&](const MultiPoly& p) {
    Element out = Element::zero(target);
    for (const auto& [mono, coeff] : p.terms()) {
      Element t = Element::constant(target, coeff);
      for (const auto& [s, e] : mono.factors()) {
        auto it = assignments.find(s);
        t *= (it != assignments.end() ? it->second : Element::symbol(target, s)).pow(e);
      }
      out += t;
    }
    return out;
  };
  return a.map_coefficients(target, [&](const Element& c) { return eval(c.num()) / eval(c.den()); });
}

Odo euler_operator(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw Error(ErrorCode::IndexOutOfRange, "Euler operator indices must be positive");
  DomainPtr dom = Domain::rational_functions(Symbol("x"));
  const Element x = Element::symbol(dom, Symbol("x"));
  const Odo delta(dom, {Element::zero(dom), x});
  Odo l = Odo::scalar(x.pow(n).inverse()) * delta;
  for (unsigned i = 1; i < n; ++i) {
    l = l * (delta - Odo::scalar(Element::constant(dom, Rational(i) * m)));
  }
  return l;
}

std::pair<Odo, Odo> lame_pair() {
  DomainPtr dom = Domain::weierstrass(Symbol("x"));
  const Element wp = Element::symbol(dom, Domain::wp());
  const Element wpp = Element::symbol(dom, Domain::wpp());
  const Element zero = Element::zero(dom);
  const Element one = Element::one(dom);
  Odo a(dom, {wp.scaled(-2), zero, one});
  Odo b(dom, {wpp.scaled(Rational(3, 2)), wp.scaled(3), zero, -one});
  return {std::move(a), std::move(b)};
}

bool verify_bc_identity(const CommutingPair& pair) { return verify_bc_identity(pair.a, pair.b, pair.curve); }

bool verify_bc_identity(const Odo& a, const Odo& b, const SpectralCurve& curve) {
  require_commuting(a, b);
  const DomainPtr& dom = a.domain();
  std::vector<Odo> apow{Odo::scalar(Element::one(dom))};
  std::vector<Odo> bpow{Odo::scalar(Element::one(dom))};
  Odo total(dom);
  for (const auto& [mono, coeff] : curve.f.terms()) {
    Element scalar = Element::constant(dom, coeff);
    unsigned ea = 0, eb = 0;
    for (const auto& [s, e] : mono.factors()) {
      if (s == curve.lambda) {
        ea = e;
      } else if (s == curve.mu) {
        eb = e;
      } else {
        scalar *= Element::symbol(dom, s).pow(e);
      }
    }
    while (apow.size() <= ea) apow.push_back(apow.back() * a);
    while (bpow.size() <= eb) bpow.push_back(bpow.back() * b);
    total = total + (apow[ea] * bpow[eb]).scaled_left(scalar);
  }
  return total.is_zero();
}

}  // namespace diffsres

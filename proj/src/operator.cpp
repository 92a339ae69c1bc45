#include "diffsres/operator.hpp"

#include "diffsres/errors.hpp"

namespace diffsres {

namespace {

void require_same(const Odo& a, const Odo& b) {
  if (!same_domain(a.domain(), b.domain())) {
    throw Error(ErrorCode::DomainMismatch, a.domain()->spec() + " vs " + b.domain()->spec());
  }
}

// Text of a single "c*Dx^k" term without its sign; returns the sign separately.
struct SignedText {
  bool negative;
  std::string text;
};

SignedText coefficient_text(const Element& c) {
  const MultiPoly& n = c.num();
  if (n.is_monomial()) {
    bool neg = sgn(n.leading_coefficient()) < 0;
    return {neg, (neg ? -c : c).to_string()};
  }
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

Odo::Odo(DomainPtr domain, std::vector<Element> coeffs) : domain_(std::move(domain)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!same_domain(c.domain(), domain_)) {
      throw Error(ErrorCode::DomainMismatch, c.domain()->spec() + " vs " + domain_->spec());
    }
  }
  normalize();
}

void Odo::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Odo Odo::scalar(const Element& c) { return Odo(c.domain(), {c}); }

Odo Odo::monomial(const Element& c, unsigned k) {
  std::vector<Element> v(k + 1, Element::zero(c.domain()));
  v[k] = c;
  return Odo(c.domain(), std::move(v));
}

Odo Odo::derivation(DomainPtr domain) { return monomial(Element::one(std::move(domain)), 1); }

Element Odo::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Element::zero(domain_); }

const Element& Odo::leading_coefficient() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroOperator, "zero operator has no leading coefficient");
  return coeffs_.back();
}

Odo Odo::operator-() const {
  Odo r(domain_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Odo operator+(const Odo& a, const Odo& b) {
  require_same(a, b);
  const Odo& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Odo& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  Odo r(a.domain_);
  r.coeffs_ = longer.coeffs_;
  for (std::size_t k = 0; k < shorter.coeffs_.size(); ++k) r.coeffs_[k] += shorter.coeffs_[k];
  r.normalize();
  return r;
}

Odo operator-(const Odo& a, const Odo& b) { return a + (-b); }

Odo Odo::scaled_left(const Element& c) const {
  if (c.is_zero()) return Odo(domain_);
  Odo r(domain_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) r.coeffs_.push_back(c * x);
  r.normalize();
  return r;
}

Odo Odo::d_times() const {
  if (is_zero()) return *this;
  // D (sum c_j D^j) = sum c_j' D^j + c_j D^(j+1)
  Odo r(domain_);
  r.coeffs_.reserve(coeffs_.size() + 1);
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.derive());
  r.coeffs_.push_back(Element::zero(domain_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) r.coeffs_[j + 1] += coeffs_[j];
  r.normalize();
  return r;
}

Odo Odo::left_mul_dpow(unsigned k) const {
  Odo r = *this;
  for (unsigned i = 0; i < k; ++i) r = r.d_times();
  return r;
}

Odo operator*(const Odo& a, const Odo& b) {
  require_same(a, b);
  Odo r(a.domain_);
  if (a.is_zero() || b.is_zero()) return r;
  // sum_i a_i (D^i B), with D^i B built incrementally.
  Odo power = b;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (i > 0) power = power.d_times();
    if (!a.coeffs_[i].is_zero()) r = r + power.scaled_left(a.coeffs_[i]);
  }
  return r;
}

Odo Odo::pow(unsigned e) const {
  Odo r = scalar(Element::one(domain_));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

Odo Odo::monic() const { return scaled_left(leading_coefficient().inverse()); }

Odo Odo::lift(DomainPtr target) const {
  return map_coefficients(target, [&](const Element& c) { return c.lift(target); });
}

std::string Odo::to_string() const {
  if (is_zero()) return "0";
  const std::string d = "D" + domain_->main_variable().name();
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Element& c = coeffs_[idx];
    if (c.is_zero()) continue;
    std::vector<SignedText> pieces;
    if (idx == 0) {
      if (c.den().is_one()) {
        // Inline the polynomial's own terms.
        for (const auto& [m, q] : c.num().terms()) {
          MultiPoly t = MultiPoly::term(m, abs(q));
          pieces.push_back({sgn(q) < 0, t.to_string()});
        }
      } else {
        pieces.push_back(coefficient_text(c));
        if (pieces.back().text.front() == '(') pieces.back().text = c.to_string();
      }
    } else {
      std::string dpow = idx == 1 ? d : d + "^" + std::to_string(idx);
      if (c.is_one()) {
        pieces.push_back({false, dpow});
      } else if ((-c).is_one()) {
        pieces.push_back({true, dpow});
      } else {
        SignedText ct = coefficient_text(c);
        pieces.push_back({ct.negative, ct.text + "*" + dpow});
      }
    }
    for (const auto& p : pieces) {
      if (out.empty()) {
        out += p.negative ? "-" + p.text : p.text;
      } else {
        out += (p.negative ? " - " : " + ") + p.text;
      }
    }
  }
  return out;
}

DivisionResult right_divide(const Odo& a, const Odo& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroOperator, "right division by the zero operator");
  const DomainPtr& dom = a.domain();
  Odo q(dom);
  Odo r = a;
  const Element lc_inv = b.leading_coefficient().inverse();
  const int ob = b.order();
  // Reuse D^k B across steps.
  std::vector<Odo> shifted{b};
  while (!r.is_zero() && r.order() >= ob) {
    const unsigned k = static_cast<unsigned>(r.order() - ob);
    while (shifted.size() <= k) shifted.push_back(shifted.back().d_times());
    Element t = r.leading_coefficient() * lc_inv;
    q = q + Odo::monomial(t, k);
    Odo next = r - shifted[k].scaled_left(t);
    if (!next.is_zero() && next.order() >= r.order()) {
      throw Error(ErrorCode::VerificationFailed, "right division failed to lower the order");
    }
    r = std::move(next);
  }
  return {std::move(q), std::move(r)};
}

Odo euclid_gcrd(const Odo& a, const Odo& b) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroOperand, "gcrd of two zero operators");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Monic remainders keep coefficient sizes down.
  Odo r0 = a.order() >= b.order() ? a.monic() : b.monic();
  Odo r1 = a.order() >= b.order() ? b.monic() : a.monic();
  while (!r1.is_zero()) {
    Odo rem = right_divide(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = rem.is_zero() ? std::move(rem) : rem.monic();
  }
  return r0;
}

Odo commutator(const Odo& a, const Odo& b) { return a * b - b * a; }

}  // namespace diffsres

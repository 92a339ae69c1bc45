#include "diffsres/poly.hpp"

#include <algorithm>
#include <cassert>

namespace diffsres {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Symbol s, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(s, exponent);
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::degree(Symbol s) const {
  for (const auto& [v, e] : factors_) {
    if (v == s) return e;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    } else if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else {
      r.factors_.push_back(*b++);
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, other.factors_.end());
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  auto d = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    unsigned sub = 0;
    if (d != divisor.factors_.end() && d->first == v) {
      sub = d->second;
      ++d;
    }
    assert(sub <= e);
    if (e > sub) r.factors_.emplace_back(v, e - sub);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::without(Symbol s) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.first == s) continue;
    r.factors_.push_back(f);
    r.degree_ += f.second;
  }
  return r;
}

Monomial Monomial::meet(const Monomial& other) const {
  Monomial r;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (b != other.factors_.end() && b->first < v) ++b;
    if (b != other.factors_.end() && b->first == v) {
      unsigned m = std::min(e, b->second);
      r.factors_.emplace_back(v, m);
      r.degree_ += m;
    }
  }
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree() ? 1 : -1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? 1 : -1;
      ++i;
      ++j;
    } else {
      // The operand holding the greater variable is the greater monomial.
      return fa[i].first < fb[j].first ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial(), c);
}

MultiPoly MultiPoly::variable(Symbol s, unsigned exponent) {
  return term(Monomial::var(s, exponent), Rational(1));
}

MultiPoly MultiPoly::term(Monomial m, Rational c) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.first, b.first) > 0; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

Rational MultiPoly::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rational(0);
}

unsigned MultiPoly::degree(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(s));
  return d;
}

unsigned MultiPoly::min_degree(Symbol s) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& t : terms_) d = std::min(d, t.first.degree(s));
  return d;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.total_degree();
}

bool MultiPoly::contains(Symbol s) const {
  for (const auto& t : terms_) {
    if (t.first.degree(s) > 0) return true;
  }
  return false;
}

std::vector<Symbol> MultiPoly::variables() const {
  std::vector<Symbol> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.first.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool MultiPoly::has_integer_coefficients() const {
  for (const auto& t : terms_) {
    if (t.second.get_den() != 1) return false;
  }
  return true;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Symbol s) const {
  std::vector<std::vector<Term>> buckets(degree(s) + 1);
  for (const auto& t : terms_) {
    buckets[t.first.degree(s)].emplace_back(t.first.without(s), t.second);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing one variable keeps the relative grlex order only within equal
    // exponents of s, which is exactly what each bucket holds.
    MultiPoly p;
    p.terms_ = std::move(b);
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_compare(x.first, y.first) > 0; });
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(Symbol s, std::span<const MultiPoly> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m = Monomial::var(s, static_cast<unsigned>(k));
    for (const auto& t : coeffs[k].terms_) terms.emplace_back(t.first * m, t.second);
  }
  return from_terms(std::move(terms));
}

MultiPoly MultiPoly::partial(Symbol s) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    unsigned e = t.first.degree(s);
    if (e == 0) continue;
    terms.emplace_back(t.first.quotient(Monomial::var(s)), t.second * e);
  }
  return from_terms(std::move(terms));
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  MultiPoly p;
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grlex order.
  for (const auto& t : terms_) p.terms_.emplace_back(t.first * m, t.second * c);
  return p;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

MultiPoly MultiPoly::merge(const MultiPoly& a, const MultiPoly& b, int sign) {
  MultiPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    int c = grlex_compare(i->first, j->first);
    if (c > 0) {
      r.terms_.push_back(*i++);
    } else if (c < 0) {
      r.terms_.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (sgn(s) != 0) r.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i != a.terms_.end(); ++i) r.terms_.push_back(*i);
  for (; j != b.terms_.end(); ++j) {
    r.terms_.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
  }
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  return *this = merge(*this, o, 1);
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  return *this = merge(*this, o, -1);
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_monomial(small.terms_[0].first, small.terms_[0].second);

  // Heap of one cursor per term of the smaller factor; products come out in
  // decreasing grlex order, so like terms are adjacent.
  struct Cursor {
    Monomial m;
    std::size_t i;
    std::size_t j;
  };
  auto less = [](const Cursor& x, const Cursor& y) { return grlex_compare(x.m, y.m) < 0; };
  std::vector<Cursor> heap;
  heap.reserve(small.size());
  for (std::size_t i = 0; i < small.size(); ++i) heap.push_back({small.terms_[i].first * large.terms_[0].first, i, 0});
  std::make_heap(heap.begin(), heap.end(), less);

  const bool integral = small.has_integer_coefficients() && large.has_integer_coefficients();
  MultiPoly out;
  out.terms_.reserve(large.size() + small.size());
  Integer zacc;
  Rational qacc;
  bool open = false;
  Monomial current;
  auto flush = [&] {
    if (!open) return;
    if (integral) {
      if (sgn(zacc) != 0) out.terms_.emplace_back(std::move(current), Rational(zacc));
    } else if (sgn(qacc) != 0) {
      out.terms_.emplace_back(std::move(current), qacc);
    }
    open = false;
  };
  Rational prod;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Cursor& top = heap.back();
    if (!open || !(top.m == current)) {
      flush();
      current = top.m;
      open = true;
      zacc = 0;
      qacc = 0;
    }
    const Rational& x = small.terms_[top.i].second;
    const Rational& y = large.terms_[top.j].second;
    if (integral) {
      mpz_addmul(zacc.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
    } else {
      mpq_mul(prod.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      qacc += prod;
    }
    if (++top.j < large.size()) {
      top.m = small.terms_[top.i].first * large.terms_[top.j].first;
      std::push_heap(heap.begin(), heap.end(), less);
    } else {
      heap.pop_back();
    }
  }
  flush();
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += a.get_str();
    } else if (a == 1) {
      out += m.to_string();
    } else {
      out += a.get_str() + "*" + m.to_string();
    }
  }
  return out;
}

}  // namespace diffsres

#include "diffsres/poly_gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <random>

#include "diffsres/errors.hpp"

namespace diffsres {

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

// Necessary condition for b | a: per-variable degree bounds.
bool degrees_admit_division(const MultiPoly& a, const MultiPoly& b) {
  if (b.total_degree() > a.total_degree()) return false;
  for (Symbol v : b.variables()) {
    if (b.degree(v) > a.degree(v)) return false;
    if (b.min_degree(v) > a.min_degree(v)) return false;
  }
  return true;
}

using CoeffVec = std::vector<MultiPoly>;

void trim(CoeffVec& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly gcd_of_list(const CoeffVec& list) {
  MultiPoly g;
  // Smaller coefficients first keeps the running gcd cheap.
  std::vector<const MultiPoly*> order;
  for (const auto& c : list) {
    if (!c.is_zero()) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(),
            [](const MultiPoly* x, const MultiPoly* y) { return x->size() < y->size(); });
  for (const MultiPoly* c : order) {
    g = gcd_impl(g, *c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& p) {
  Monomial m = mono.leading_term().first;
  for (const auto& t : p.terms()) {
    m = m.meet(t.first);
    if (m.is_one()) break;
  }
  return MultiPoly::term(m, Rational(1));
}

Integer max_norm(const MultiPoly& p) {
  Integer n = 0;
  for (const auto& t : p.terms()) {
    if (abs(t.second.get_num()) > n) n = abs(t.second.get_num());
  }
  return n;
}

Integer integer_content(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
  return g;
}

MultiPoly evaluate_at(const MultiPoly& p, Symbol v, const Integer& xi) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), m.degree(v));
    out.emplace_back(m.without(v), c * Rational(pw));
  }
  return MultiPoly::from_terms(std::move(out));
}

// Balanced xi-adic digits of g become the coefficients of powers of v.
std::optional<MultiPoly> xi_adic(MultiPoly g, Symbol v, const Integer& xi, unsigned max_degree) {
  std::vector<MultiPoly::Term> out;
  const Integer half = xi / 2;
  for (unsigned i = 0; !g.is_zero(); ++i) {
    if (i > max_degree) return std::nullopt;
    std::vector<MultiPoly::Term> rest;
    for (const auto& [m, c] : g.terms()) {
      const Integer& n = c.get_num();
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) out.emplace_back(i == 0 ? m : m * Monomial::var(v, i), Rational(r));
      Integer q = n - r;
      mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
      if (q != 0) rest.emplace_back(m, Rational(q));
    }
    g = MultiPoly::from_terms(std::move(rest));
  }
  return MultiPoly::from_terms(std::move(out));
}

constexpr std::size_t kHeuristicBits = 1u << 16;

// Heuristic gcd over Z of integer polynomials, integer content included.
// Empty when the evaluation points stop giving a certified answer.
std::optional<MultiPoly> heuristic_gcd(const MultiPoly& a, const MultiPoly& b) {
  const Integer ca = integer_content(a);
  const Integer cb = integer_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(c));
  const MultiPoly pa = a * Rational(Integer(1), ca);
  const MultiPoly pb = b * Rational(Integer(1), cb);

  std::vector<Symbol> va = pa.variables();
  Symbol v = va.front();
  unsigned best = 0;
  for (Symbol s : va) {
    unsigned d = std::min(pa.degree(s), pb.degree(s));
    if (d > best) {
      best = d;
      v = s;
    }
  }
  const unsigned bound = std::min(pa.degree(v), pb.degree(v));
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > kHeuristicBits) break;
    MultiPoly ea = evaluate_at(pa, v, xi);
    MultiPoly eb = evaluate_at(pb, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto h = heuristic_gcd(ea, eb)) {
        if (auto g = xi_adic(std::move(*h), v, xi, bound); g && !g->is_zero()) {
          MultiPoly cand = normalize_associate(*g);
          if (try_divide(pa, cand) && try_divide(pb, cand)) return cand * Rational(c);
        }
      }
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

// Primitive PRS for a, b primitive with respect to s, both of positive degree.
MultiPoly primitive_prs(MultiPoly a, MultiPoly b, Symbol s) {
  if (a.degree(s) < b.degree(s)) std::swap(a, b);
  if (auto q = try_divide(a, b)) return b;
  while (true) {
    MultiPoly r = pseudo_remainder(a, b, s);
    if (r.is_zero()) return b;
    if (r.degree(s) == 0) return MultiPoly(1);
    a = std::move(b);
    MultiPoly c = content_in(r, s);
    b = normalize_associate(divide_exact(r, c));
  }
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::optional<std::uint64_t> rational_mod(const Rational& q) {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inv_mod(d));
}

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in F_p[s] with the other variables replaced by point values.
std::optional<ModPoly> image(const MultiPoly& p, Symbol s, const std::map<Symbol, std::uint64_t>& point) {
  ModPoly out(p.degree(s) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    auto v = rational_mod(c);
    if (!v) return std::nullopt;
    std::uint64_t t = *v;
    unsigned e = 0;
    for (const auto& [sym, k] : m.factors()) {
      if (sym == s) {
        e = k;
      } else {
        t = mul_mod(t, pow_mod(point.at(sym), k));
      }
    }
    out[e] = (out[e] + t) % kPrime;
  }
  trim_mod(out);
  return out;
}

std::size_t gcd_degree_mod(ModPoly a, ModPoly b) {
  while (!b.empty()) {
    std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mul_mod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        a[k + shift] = (a[k + shift] + kPrime - mul_mod(f, b[k])) % kPrime;
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True only when gcd(a, b) is certainly constant: an image that keeps the
// degree of a in s bounds the degree of the gcd in s from above.
bool certainly_coprime(const MultiPoly& a, const MultiPoly& b, const std::vector<Symbol>& shared) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
  std::map<Symbol, std::uint64_t> point;
  for (Symbol s : shared) {
    bool settled = false;
    for (int attempt = 0; attempt < 2 && !settled; ++attempt) {
      point.clear();
      for (const auto& [m, c] : a.terms()) {
        for (const auto& f : m.factors()) point.try_emplace(f.first, dist(rng));
      }
      for (const auto& [m, c] : b.terms()) {
        for (const auto& f : m.factors()) point.try_emplace(f.first, dist(rng));
      }
      auto ia = image(a, s, point);
      auto ib = image(b, s, point);
      if (!ia || !ib || ia->size() != a.degree(s) + 1 || ib->empty()) continue;
      if (gcd_degree_mod(*ia, *ib) != 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize_associate(b);
  if (b.is_zero()) return normalize_associate(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return normalize_associate(a);

  std::vector<Symbol> va = a.variables();
  std::vector<Symbol> vb = b.variables();
  std::vector<Symbol> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
  if (certainly_coprime(a, b, shared)) return MultiPoly(1);
  if (auto h = heuristic_gcd(normalize_associate(a), normalize_associate(b))) return normalize_associate(*h);
  // A variable present in only one operand can be eliminated through content.
  for (Symbol v : va) {
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_impl(content_in(a, v), b);
  }
  for (Symbol v : vb) {
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_impl(a, content_in(b, v));
  }

  // Same variable set: recurse on the variable of least degree.
  Symbol s = va.front();
  unsigned best = ~0u;
  for (Symbol v : va) {
    unsigned d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      s = v;
    }
  }
  MultiPoly ca = content_in(a, s);
  MultiPoly cb = content_in(b, s);
  MultiPoly pa = divide_exact(a, ca);
  MultiPoly pb = divide_exact(b, cb);
  MultiPoly c = gcd_impl(ca, cb);
  MultiPoly g = primitive_prs(normalize_associate(pa), normalize_associate(pb), s);
  return normalize_associate(c * g);
}

}  // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  if (!degrees_admit_division(a, b)) return std::nullopt;

  const auto& [lead_m, lead_c] = b.leading_term();
  if (b.is_monomial()) {
    std::vector<MultiPoly::Term> q;
    q.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
      if (!lead_m.divides(m)) return std::nullopt;
      q.emplace_back(m.quotient(lead_m), c / lead_c);
    }
    return MultiPoly::from_terms(std::move(q));
  }

  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead_m.divides(top->first)) return std::nullopt;
    Monomial qm = top->first.quotient(lead_m);
    Rational qc = top->second / lead_c;
    rem.erase(top);
    for (std::size_t k = 1; k < b.size(); ++k) {
      const auto& [bm, bc] = b.terms()[k];
      Monomial m = qm * bm;
      auto [it, inserted] = rem.try_emplace(std::move(m), 0);
      it->second -= qc * bc;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.emplace_back(std::move(qm), std::move(qc));
  }
  return MultiPoly::from_terms(std::move(quotient));
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) {
    throw Error(ErrorCode::InexactDivision, "(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return std::move(*q);
}

std::pair<Rational, MultiPoly> integer_primitive(const MultiPoly& p) {
  if (p.is_zero()) return {Rational(1), MultiPoly()};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(p.leading_coefficient()) < 0) c = -c;
  if (c == 1) return {c, p};
  return {c, p * Rational(1 / c)};
}

MultiPoly normalize_associate(const MultiPoly& p) { return integer_primitive(p).second; }

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  MultiPoly g = gcd(a, b);
  return normalize_associate(divide_exact(a, g) * b);
}

MultiPoly content_in(const MultiPoly& p, Symbol s) { return gcd_of_list(p.coefficients_in(s)); }

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Symbol s) {
  CoeffVec r = a.coefficients_in(s);
  CoeffVec d = b.coefficients_in(s);
  trim(r);
  trim(d);
  if (d.empty()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  const std::size_t db = d.size() - 1;
  const MultiPoly& lc = d.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t dr = r.size() - 1;
    MultiPoly lr = r.back();
    const std::size_t shift = dr - db;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = r[k] * lc;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * d[k];
    trim(r);
  }
  return MultiPoly::from_coefficients(s, r);
}

}  // namespace diffsres

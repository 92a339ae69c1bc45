// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "diffsres/errors.hpp"
#include "diffsres/parser.hpp"
#include "diffsres/spectral.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/suites.hpp"

using namespace diffsres;
using testing::Report;

namespace {

Element sym(const DomainPtr& d, const char* n) { return Element::symbol(d, Symbol(n)); }
Element num(const DomainPtr& d, long c) { return Element::constant(d, Rational(c)); }
Odo sc(const Element& e) { return Odo::scalar(e); }

DomainPtr generic_domain() { return parse_domain("diffpoly(x; inds=a0..a2,b0..b3)"); }

std::pair<Odo, Odo> generic_pair() {
  auto d = generic_domain();
  return {Odo(d, {sym(d, "a0"), sym(d, "a1"), sym(d, "a2")}),
          Odo(d, {sym(d, "b0"), sym(d, "b1"), sym(d, "b2"), sym(d, "b3")})};
}

DiffMatrix rows_of(const DomainPtr& d, const std::vector<std::vector<Element>>& rows) {
  DiffMatrix m(d, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::pair<Odo, Odo> shifted(const Odo& a, const Odo& b) {
  auto dom = spectral_domain(a.domain());
  return {shift_by_parameter(a.lift(dom), lambda_symbol()), shift_by_parameter(b.lift(dom), mu_symbol())};
}

Report criterion_1() {
  Report r;
  auto [a, b] = generic_pair();
  auto d = a.domain();
  auto v = [&](const char* n) { return sym(d, n); };
  const Element z = Element::zero(d), two = num(d, 2);
  DiffMatrix expect = rows_of(
      d, {{v("a2"), two * v("a2'") + v("a1"), v("a2''") + two * v("a1'") + v("a0"), v("a1''") + two * v("a0'"),
           v("a0''")},
          {z, v("a2"), v("a2'") + v("a1"), v("a1'") + v("a0"), v("a0'")},
          {z, z, v("a2"), v("a1"), v("a0")},
          {v("b3"), v("b3'") + v("b2"), v("b2'") + v("b1"), v("b1'") + v("b0"), v("b0'")},
          {z, v("b3"), v("b2"), v("b1"), v("b0")}});
  DiffMatrix s = sylvester(a, b);
  r.check(s.rows() == 5 && s.cols() == 5, "5x5 shape");
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) r.check(s(i, j) == expect(i, j), "entry " + std::to_string(i) + "," + std::to_string(j));
  }
  return r;
}

Report criterion_2() {
  Report r;
  auto [a, b] = generic_pair();
  auto d = a.domain();
  auto v = [&](const char* n) { return sym(d, n); };
  const Element z = Element::zero(d);
  DiffMatrix m1 = rows_of(d, {{v("a2"), v("a2'") + v("a1"), v("a1'") + v("a0"), v("a0'")},
                              {z, v("a2"), v("a1"), v("a0")},
                              {v("b3"), v("b2"), v("b1"), v("b0")}});
  DiffMatrix s01 = rows_of(d, {{v("a2"), v("a2'") + v("a1"), v("a0'")}, {z, v("a2"), v("a0")}, {v("b3"), v("b2"), v("b0")}});
  DiffMatrix s11 =
      rows_of(d, {{v("a2"), v("a2'") + v("a1"), v("a1'") + v("a0")}, {z, v("a2"), v("a1")}, {v("b3"), v("b2"), v("b1")}});
  Element d0 = v("a2") * v("a2") * v("b0") - v("a2") * v("a0") * v("b2") - v("a2") * v("b3") * v("a0'") +
               v("a0") * v("b3") * v("a2'") + v("a0") * v("b3") * v("a1");
  Element d1 = v("b1") * v("a2") * v("a2") - v("a1'") * v("a2") * v("b3") - v("a2") * v("a0") * v("b3") -
               v("a2") * v("b2") * v("a1") + v("b3") * v("a2'") * v("a1") + v("b3") * v("a1") * v("a1");
  r.check(subres_matrix(a, b, 1) == m1, "subres_matrix index 1");
  SubresultantRecord rec = subresultant(a, b, 1);
  r.check(rec.minors.size() == 2, "two minors");
  if (rec.minors.size() == 2) {
    r.check(rec.minors[0] == s01, "minor S_0^1");
    r.check(rec.minors[1] == s11, "minor S_1^1");
  }
  r.check(rec.op == Odo(d, {d0, d1}), "det(S_0^1) + det(S_1^1) D");
  return r;
}

Report criterion_3() {
  Report r;
  auto d = parse_domain("ratfunc(s)");
  auto s = sym(d, "s");
  Element res = resultant(parse_operator("Ds^2+s", d), parse_operator("Ds^3+Ds", d));
  r.check(res == s.pow(3) - num(d, 2) * s.pow(2) + s + num(d, 2), res.to_string());
  return r;
}

Report criterion_4() {
  Report r;
  auto d = Domain::rational_functions(Symbol("x"));
  auto x = sym(d, "x");
  auto c = [&](long k, unsigned p) { return num(d, k) / x.pow(p); };
  Odo e4(d, {Element::zero(d), c(-935, 3), c(295, 2), c(-30, 1), Element::one(d)});
  Odo e6(d, {Element::zero(d), c(-65835, 5), c(35595, 4), c(-7650, 3), c(825, 2), c(-45, 1), Element::one(d)});
  r.check(euler_operator(4, 6) == e4, "E(4,6)");
  r.check(euler_operator(6, 4) == e6, "E(6,4)");
  return r;
}

Report criterion_5() {
  Report r;
  Odo a = euler_operator(4, 6), b = euler_operator(6, 4);
  auto [al, bm] = shifted(a, b);
  auto d = al.domain();
  auto x = sym(d, "x"), l = sym(d, "lambda"), m = sym(d, "mu");
  r.check(bc_resultant(a, b) == (m.pow(2) - l.pow(3)).pow(2), "h = (-lambda^3 + mu^2)^2");
  const Element c = l * x.pow(4) - num(d, 560);
  r.check(subresultant(al, bm, 1).op == sc((l.pow(3) - m.pow(2)) * c / x.pow(4)), "sres_1");
  Odo s2 = subresultant(al, bm, 2).op;
  r.check(s2.order() == 2 && s2.leading_coefficient() == c.pow(2) / x.pow(8), "lc(sres_2)");
  CurveGcrd g = gcrd_on_curve(a, b);
  r.check(g.index == 2, "d = 2");
  auto ds = Domain::rational_functions(Symbol("x"), {Symbol("s")});
  auto s = sym(ds, "s"), xs = sym(ds, "x");
  const std::map<Symbol, Element> at{{lambda_symbol(), s.pow(2)}, {mu_symbol(), s.pow(3)}};
  const Element cs = s.pow(2) * xs.pow(4) - num(ds, 560);
  Odo out10(ds, {-(s.pow(2) * (s * xs.pow(2) - num(ds, 20)) * xs.pow(2)) / cs,
                 -(num(ds, 5) * (num(ds, 3) * s.pow(2) * xs.pow(4) - num(ds, 1232))) / (xs * cs), num(ds, 1)});
  r.check(substitute_parametrization(g.gcrd, at).monic() == out10, "gcrd on curve at (s^2, s^3)");
  r.check(euclid_gcrd(substitute_parametrization(al, at), substitute_parametrization(bm, at)) == out10,
          "euclid on the parametrized pair");
  return r;
}

Report criterion_6() {
  Report r;
  auto [a, b] = lame_pair();
  auto [al, bm] = shifted(a, b);
  auto d = al.domain();
  auto l = sym(d, "lambda"), m = sym(d, "mu");
  auto g2 = Element::symbol(d, Domain::g2()), g3 = Element::symbol(d, Domain::g3());
  auto wp = Element::symbol(d, Domain::wp()), wpp = Element::symbol(d, Domain::wpp());
  const Rational q(1, 4);
  r.check(bc_resultant(a, b) == g3.scaled(q) + m.pow(2) + (g2 * l).scaled(q) - l.pow(3), "h");
  Odo out14(d, {-wpp.scaled(Rational(1, 2)) - m, wp - l});
  r.check(subresultant(al, bm, 1).op == out14, "sres_1");
  CommutingPair pair = make_commuting_pair(a, b);
  CurveGcrd g = gcrd_on_curve(pair);
  r.check(g.index == 1, "d = 1");
  r.check(g.gcrd == monic_on_curve(out14, pair.curve), "monic reduction of sres_1");
  r.check(g.gcrd == Odo(d, {(-wpp.scaled(Rational(1, 2)) - m) / (wp - l), Element::one(d)}), "explicit form");
  return r;
}

Report merge(std::vector<Report> parts) {
  Report out;
  for (auto& p : parts) {
    out.cases += p.cases;
    if (p.failures > 0 && out.failures == 0) out.first_failure = p.first_failure;
    out.failures += p.failures;
  }
  return out;
}

Report criterion_10() {
  std::vector<Report> parts;
  std::uint64_t seed = 1000;
  for (const auto& dom : testing::sample_domains()) {
    parts.push_back(testing::arithmetic_suite(dom, 200, seed++));
    for (std::size_t n = 2; n <= 5; ++n) parts.push_back(testing::determinant_suite(dom, n, 50, seed++));
  }
  return merge(std::move(parts));
}

Report criterion_11() {
  Report r;
  Odo a = euler_operator(4, 6), b = euler_operator(6, 4);
  r.check(verify_bc_identity(make_commuting_pair(a, b)), "Euler f(A, B) = 0");
  r.check(a.pow(3) == b.pow(2), "A^3 = B^2");
  auto [la, lb] = lame_pair();
  r.check(verify_bc_identity(make_commuting_pair(la, lb)), "Lame f(A, B) = 0");
  auto d = la.domain();
  auto g2 = Element::symbol(d, Domain::g2()), g3 = Element::symbol(d, Domain::g3());
  r.check(lb.pow(2) == la.pow(3) - la.scaled_left(g2.scaled(Rational(1, 4))) - sc(g3.scaled(Rational(1, 4))),
          "B^2 = A^3 - g2/4 A - g3/4");
  return r;
}

Report criterion_12() {
  return merge({testing::golden_suite(DIFFSRES_GOLDEN_DIR), testing::roundtrip_suite(100, 12)});
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Report()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "generic Sylvester matrix", criterion_1},
      {2, "generic first subresultant, minors and M_1", criterion_2},
      {3, "resultant of Ds^2+s and Ds^3+Ds", criterion_3},
      {4, "Euler constructors E(4,6), E(6,4)", criterion_4},
      {5, "Euler spectral pipeline", criterion_5},
      {6, "Lame spectral pipeline", criterion_6},
      {7, "coprimality property (100 pairs)", [] { return testing::coprimality_suite(100, 7); }},
      {8, "subresultant gap property (50 planted factors)", [] { return testing::gap_suite(50, 8); }},
      {9, "Bezout cofactor property (50 pairs)", [] { return testing::bezout_suite(50, 9); }},
      {10, "arithmetic invariants and determinant backends", criterion_10},
      {11, "Burchnall-Chaundy identities", criterion_11},
      {12, "CLI golden files and parse/render round trip", criterion_12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) r.check(false, "took " + std::to_string(secs) + "s");
    const bool ok = r.passed();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.title, r.summary().c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

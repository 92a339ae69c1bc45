#include "doctest.h"
#include "diffsres/errors.hpp"
#include "diffsres/spectral.hpp"
#include "support/generators.hpp"
#include "support/suites.hpp"

using namespace diffsres;

namespace {

Element sym(const DomainPtr& d, const char* n) { return Element::symbol(d, Symbol(n)); }
Element num(const DomainPtr& d, long c) { return Element::constant(d, Rational(c)); }
Odo D(const DomainPtr& d) { return Odo::derivation(d); }
Odo sc(const Element& e) { return Odo::scalar(e); }

DomainPtr generic_domain() {
  return Domain::diff_polynomials(Symbol("x"), {Symbol("a0"), Symbol("a1"), Symbol("a2"), Symbol("b0"), Symbol("b1"),
                                                Symbol("b2"), Symbol("b3")});
}

std::pair<Odo, Odo> generic_pair() {
  auto d = generic_domain();
  Odo a(d, {sym(d, "a0"), sym(d, "a1"), sym(d, "a2")});
  Odo b(d, {sym(d, "b0"), sym(d, "b1"), sym(d, "b2"), sym(d, "b3")});
  return {a, b};
}

std::pair<Odo, Odo> ds_pair() {
  auto d = Domain::rational_functions(Symbol("s"));
  return {D(d).pow(2) + sc(sym(d, "s")), D(d).pow(3) + D(d)};
}

std::pair<Odo, Odo> shifted(const Odo& a, const Odo& b) {
  auto dom = spectral_domain(a.domain());
  return {shift_by_parameter(a.lift(dom), lambda_symbol()), shift_by_parameter(b.lift(dom), mu_symbol())};
}

}  // namespace

TEST_CASE("generic Sylvester matrix") {
  auto [a, b] = generic_pair();
  DiffMatrix s = sylvester(a, b);
  REQUIRE(s.rows() == 5);
  CHECK(s.to_string() ==
        "[a2, a1 + 2*a2', a0 + 2*a1' + a2'', 2*a0' + a1'', a0'']\n"
        "[0, a2, a1 + a2', a0 + a1', a0']\n"
        "[0, 0, a2, a1, a0]\n"
        "[b3, b2 + b3', b1 + b2', b0 + b1', b0']\n"
        "[0, b3, b2, b1, b0]\n");
  CHECK(subres_matrix(a, b, 0) == s);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) CHECK(s(r, c).den().is_one());
  }
}

TEST_CASE("generic first subresultant") {
  auto [a, b] = generic_pair();
  DiffMatrix m1 = subres_matrix(a, b, 1);
  CHECK(m1.to_string() ==
        "[a2, a1 + a2', a0 + a1', a0']\n"
        "[0, a2, a1, a0]\n"
        "[b3, b2, b1, b0]\n");
  SubresultantRecord rec = subresultant(a, b, 1);
  REQUIRE(rec.minors.size() == 2);
  CHECK(rec.minors[0].to_string() == "[a2, a1 + a2', a0']\n[0, a2, a0]\n[b3, b2, b0]\n");
  CHECK(rec.minors[1].to_string() == "[a2, a1 + a2', a0 + a1']\n[0, a2, a1]\n[b3, b2, b1]\n");
  auto d = a.domain();
  auto v = [&](const char* n) { return sym(d, n); };
  Element s10 = v("a2") * v("a2") * v("b0") - v("a2") * v("a0") * v("b2") - v("a2") * v("b3") * v("a0'") +
                v("a0") * v("b3") * v("a2'") + v("a0") * v("b3") * v("a1");
  Element s11 = v("b1") * v("a2") * v("a2") - v("a1'") * v("a2") * v("b3") - v("a2") * v("a0") * v("b3") -
                v("a2") * v("b2") * v("a1") + v("b3") * v("a2'") * v("a1") + v("b3") * v("a1") * v("a1");
  CHECK(rec.op == Odo(d, {s10, s11}));
  CHECK(rec.op.coeff(0) == determinant(rec.minors[0]));
  CHECK(rec.op.coeff(1) == determinant(rec.minors[1]));
}

TEST_CASE("shapes and index checks") {
  auto d = Domain::rational_functions(Symbol("x"));
  testing::Gen g(5);
  Odo a = g.op(d, 4), b = g.op(d, 6);
  DiffMatrix m = subres_matrix(a, b, 2);
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 8);
  CHECK_THROWS_AS(subres_matrix(a, b, 4), Error);
  CHECK_THROWS_AS(subres_matrix(a, b, -1), Error);
  CHECK(subresultant_sequence(a, b).size() == 4);
  CHECK(sylvester(D(d), D(d)).to_string() == "[1, 0]\n[1, 0]\n");
  CHECK(resultant(D(d), D(d)).is_zero());
  CHECK_THROWS_AS(sylvester(Odo(d), D(d)), Error);
  CHECK_THROWS_AS(sylvester(sc(num(d, 1)), sc(num(d, 2))), Error);
  // Order-0 B: the resultant is b0^n.
  auto x = sym(d, "x");
  CHECK(resultant(D(d).pow(3) + sc(x), sc(x + num(d, 1))) == (x + num(d, 1)).pow(3));
  CHECK(gcrd_subres(D(d).pow(3), sc(x)) == sc(num(d, 1)));
}

TEST_CASE("pdet follows the column formula") {
  auto d = Domain::rational_functions(Symbol("x"));
  DiffMatrix row(d, 1, 2);
  row(0, 0) = sym(d, "x");
  row(0, 1) = num(d, 7);
  CHECK(pdet(row).op == Odo(d, {num(d, 7), sym(d, "x")}));
  DiffMatrix sq(d, 2, 2);
  sq(0, 0) = num(d, 1);
  sq(0, 1) = num(d, 2);
  sq(1, 0) = num(d, 3);
  sq(1, 1) = num(d, 4);
  CHECK(pdet(sq).op == sc(num(d, -2)));
  CHECK_THROWS_AS(pdet(DiffMatrix(d, 3, 2)), Error);
}

TEST_CASE("simple resultant and cofactors") {
  auto [a, b] = ds_pair();
  auto d = a.domain();
  auto s = sym(d, "s");
  const Element expect = s.pow(3) - num(d, 2) * s.pow(2) + s + num(d, 2);
  CHECK(resultant(a, b) == expect);
  CHECK(resultant(a, b, Execution::serial) == expect);
  BezoutPair bp = bezout_cofactors(a, b);
  CHECK(bp.p * a + bp.q * b == sc(expect));
  CHECK(bp.p.order() == 2);
  CHECK(bp.q.order() == 1);
  CHECK(gcrd_subres(a, b) == sc(num(d, 1)));
  BezoutPair same = bezout_cofactors(a, a);
  CHECK((same.p * a + same.q * a).is_zero());
}

TEST_CASE("Euler subresultants") {
  auto [al, bm] = shifted(euler_operator(4, 6), euler_operator(6, 4));
  auto d = al.domain();
  auto x = sym(d, "x"), l = sym(d, "lambda"), m = sym(d, "mu");
  auto seq = subresultant_sequence(al, bm);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0].op == sc((m.pow(2) - l.pow(3)).pow(2)));
  CHECK(seq[0].op == sc(resultant(al, bm)));
  const Element c = l * x.pow(4) - num(d, 560);
  CHECK(seq[1].op == sc((l.pow(3) - m.pow(2)) * c / x.pow(4)));
  CHECK(seq[2].op.order() == 2);
  CHECK(seq[2].op.leading_coefficient() == c.pow(2) / x.pow(8));
  // The factored display: c * ((-mu x^2 + 20 lambda)/x^6 - 5(3 lambda x^4 - 1232)/x^9 D + c/x^8 D^2).
  Odo inner(d, {(-m * x.pow(2) + num(d, 20) * l) / x.pow(6),
                num(d, -5) * (num(d, 3) * l * x.pow(4) - num(d, 1232)) / x.pow(9), c / x.pow(8)});
  CHECK(seq[2].op == inner.scaled_left(c));
  for (const auto& r : seq) {
    for (std::size_t j = 0; j < r.minors.size(); ++j) CHECK(r.op.coeff(j) == determinant(r.minors[j]));
  }
}

TEST_CASE("gcrd_subres recovers the parametrized Euler factor") {
  auto [al, bm] = shifted(euler_operator(4, 6), euler_operator(6, 4));
  auto ds = Domain::rational_functions(Symbol("x"), {Symbol("s")});
  auto s = sym(ds, "s");
  std::map<Symbol, Element> at{{lambda_symbol(), s.pow(2)}, {mu_symbol(), s.pow(3)}};
  Odo a = substitute_parametrization(al, at), b = substitute_parametrization(bm, at);
  auto x = sym(ds, "x");
  const Element c = s.pow(2) * x.pow(4) - num(ds, 560);
  Odo expect(ds, {-(s.pow(2) * (s * x.pow(2) - num(ds, 20)) * x.pow(2)) / c,
                  -(num(ds, 5) * (num(ds, 3) * s.pow(2) * x.pow(4) - num(ds, 1232))) / (x * c), num(ds, 1)});
  CHECK(gcrd_subres(a, b) == expect);
  CHECK(gcrd_subres(a, b, Execution::serial) == expect);
  CHECK(euclid_gcrd(a, b) == expect);
}

TEST_CASE("Lamé resultant and first subresultant") {
  auto [la, lb] = lame_pair();
  auto [al, bm] = shifted(la, lb);
  auto d = al.domain();
  auto l = sym(d, "lambda"), m = sym(d, "mu");
  auto g2 = Element::symbol(d, Domain::g2()), g3 = Element::symbol(d, Domain::g3());
  auto wp = Element::symbol(d, Domain::wp()), wpp = Element::symbol(d, Domain::wpp());
  const Rational q(1, 4);
  CHECK(resultant(al, bm) == g3.scaled(q) + m.pow(2) + (g2 * l).scaled(q) - l.pow(3));
  auto seq = subresultant_sequence(al, bm);
  REQUIRE(seq.size() == 2);
  CHECK(seq[1].op == Odo(d, {-wpp.scaled(Rational(1, 2)) - m, wp - l}));
}

TEST_CASE("domain closure over differential polynomials") {
  auto [a, b] = generic_pair();
  for (const auto& r : subresultant_sequence(a, b)) {
    for (const auto& c : r.op.coefficients()) CHECK(c.den().is_one());
  }
  BezoutPair bp = bezout_cofactors(a, b);
  CHECK(bp.p * a + bp.q * b == sc(resultant(a, b)));
}

TEST_CASE("property suites") {
  auto cop = testing::coprimality_suite(30, 1);
  INFO(cop.summary());
  CHECK(cop.passed());
  auto gap = testing::gap_suite(12, 2);
  INFO(gap.summary());
  CHECK(gap.passed());
  auto bez = testing::bezout_suite(15, 3);
  INFO(bez.summary());
  CHECK(bez.passed());
}

TEST_CASE("serial and parallel subresultants agree") {
  testing::Gen g(77);
  auto d = Domain::rational_functions(Symbol("x"), {Symbol("s")});
  for (int k = 0; k < 4; ++k) {
    Odo a = g.op(d, 3), b = g.op(d, 4);
    auto ser = subresultant_sequence(a, b, Execution::serial);
    auto par = subresultant_sequence(a, b, Execution::parallel);
    REQUIRE(ser.size() == par.size());
    for (std::size_t i = 0; i < ser.size(); ++i) CHECK(ser[i].op == par[i].op);
  }
}

#include "doctest.h"
#include "diffsres/errors.hpp"
#include "support/generators.hpp"
#include "support/suites.hpp"

using namespace diffsres;

namespace {

DomainPtr qx() { return Domain::rational_functions(Symbol("x"), {Symbol("lambda"), Symbol("mu")}); }
Element sym(const DomainPtr& d, const char* n) { return Element::symbol(d, Symbol(n)); }
Element num(const DomainPtr& d, long c) { return Element::constant(d, Rational(c)); }

}  // namespace

TEST_CASE("rational function arithmetic") {
  auto d = qx();
  auto x = sym(d, "x");
  auto one = Element::one(d);
  CHECK((x.inverse() + (-x.inverse())).is_zero());
  auto lm = sym(d, "lambda") + sym(d, "mu");
  CHECK(lm.den().is_one());
  CHECK(lm.num().size() == 2);
  CHECK(x / (x - one) + one / (x - one) == (x + one) / (x - one));
  CHECK((x + one).to_string() == "x + 1");
  CHECK(((x + one) / (x - one)).to_string() == "(x + 1)/(x - 1)");
  CHECK((x.inverse() * x).is_one());
  auto l = sym(d, "lambda");
  CHECK((l - one) * (l + one) == l * l - one);
  CHECK(x.pow(2).inverse().to_string() == "1/x^2");
  auto lx = l * x.pow(4) - num(d, 560);
  CHECK(lx.inverse().to_string() == "1/(lambda*x^4 - 560)");
  CHECK(lx * lx.inverse() == one);
  CHECK_THROWS_AS(Element::zero(d).inverse(), Error);
  CHECK(x.inverse().derive() == -(x.pow(2).inverse()));
  CHECK(l.derive().is_zero());
  CHECK((x - x).is_zero());
  CHECK_FALSE((l.pow(3) - sym(d, "mu").pow(2)).is_zero());
}

TEST_CASE("domain mismatch is rejected") {
  auto a = Element::symbol(Domain::rational_functions(Symbol("x")), Symbol("x"));
  auto b = Element::symbol(Domain::rational_functions(Symbol("t")), Symbol("t"));
  try {
    (void)(a + b);
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainMismatch);
  }
  CHECK_THROWS_AS(Element::symbol(Domain::rational_functions(Symbol("x")), Symbol("y")), Error);
}

TEST_CASE("differential polynomial jets are created on demand") {
  auto d = Domain::diff_polynomials(Symbol("x"), {Symbol("a2"), Symbol("b3")});
  auto a2 = sym(d, "a2");
  CHECK(a2.derive() == Element::symbol(d, Symbol("a2'")));
  CHECK(a2.derive().derive().to_string() == "a2''");
  auto p = a2 * sym(d, "b3");
  CHECK(p.derive().to_string() == "a2*b3' + a2'*b3");
  CHECK(sym(d, "x").derive().is_one());
}

TEST_CASE("weierstrass relation and derivation") {
  auto d = Domain::weierstrass(Symbol("x"));
  auto wp = Element::symbol(d, Domain::wp());
  auto wpp = Element::symbol(d, Domain::wpp());
  auto g2 = Element::symbol(d, Domain::g2());
  auto g3 = Element::symbol(d, Domain::g3());
  const auto rel = num(d, 4) * wp.pow(3) - g2 * wp - g3;
  CHECK(wpp * wpp == rel);
  CHECK(wpp.pow(3) == rel * wpp);
  CHECK((wp * wpp).num() == MultiPoly::variable(Domain::wp()) * MultiPoly::variable(Domain::wpp()));
  CHECK(wp.derive() == wpp);
  CHECK(wpp.derive() == num(d, 6) * wp.pow(2) - g2.scaled(Rational(1, 2)));
  CHECK((wpp * wpp - rel).is_zero());
  CHECK((wpp * wpp - rel).derive().is_zero());
  CHECK(wp.inverse().to_string() == "1/wp");
  // 1/wpp is rationalized: wpp / (4 wp^3 - g2 wp - g3).
  auto inv = wpp.inverse();
  CHECK_FALSE(inv.den().contains(Domain::wpp()));
  CHECK((inv * wpp).is_one());
  CHECK(g3.derive().is_zero());
}

TEST_CASE("reduce_weierstrass rewrites powers of wpp") {
  MultiPoly wp = MultiPoly::variable(Domain::wp());
  MultiPoly wpp = MultiPoly::variable(Domain::wpp());
  MultiPoly rel = 4 * wp.pow(3) - MultiPoly::variable(Domain::g2()) * wp - MultiPoly::variable(Domain::g3());
  CHECK(reduce_weierstrass(wpp * wpp) == rel);
  CHECK(reduce_weierstrass(wpp.pow(3)) == rel * wpp);
  CHECK(reduce_weierstrass(wp * wpp) == wp * wpp);
}

TEST_CASE("element invariants over random samples") {
  std::uint64_t seed = 11;
  for (const auto& dom : testing::sample_domains()) {
    auto r = testing::arithmetic_suite(dom, 40, seed++);
    INFO(r.summary());
    CHECK(r.passed());
  }
}

#pragma once

#include <map>
#include <utility>

#include "diffsres/subres.hpp"

namespace diffsres {

Symbol lambda_symbol();
Symbol mu_symbol();

struct SpectralCurve {
  MultiPoly f;
  Symbol lambda;
  Symbol mu;
};

struct CommutingPair {
  Odo a;
  Odo b;
  Element h;
  SpectralCurve curve;
};

struct CurveGcrd {
  int index;  // d: first subresultant that survives reduction
  Odo gcrd;   // monic over K(Gamma), coefficients reduced
  SpectralCurve curve;
};

// Domain of A extended by the spectral parameters lambda and mu.
DomainPtr spectral_domain(const DomainPtr& base);

// A - p; throws UnknownParameter when p is not a constant parameter of A's domain.
Odo shift_by_parameter(const Odo& a, Symbol p);

// Res(A - lambda, B - mu) over the domain extended by lambda, mu.
// Throws NotCommuting or NonConstantResultant.
Element bc_resultant(const Odo& a, const Odo& b, Execution exec = Execution::parallel);

// h / gcd(h, dh/dlambda, dh/dmu), integer-primitive with positive lc.
MultiPoly squarefree_part(const MultiPoly& h, Symbol lambda = lambda_symbol(), Symbol mu = mu_symbol());

// Canonical representative of e in K(Gamma): numerator polynomial in the
// monic variable of f of degree below deg f, denominator free of it.
Element reduce_mod_curve(const Element& e, const SpectralCurve& curve);
Odo reduce_mod_curve(const Odo& a, const SpectralCurve& curve);
// Monic over K(Gamma), coefficients reduced.
Odo monic_on_curve(const Odo& a, const SpectralCurve& curve);
// Right division over K(Gamma), coefficients reduced at every step.
DivisionResult right_divide_on_curve(const Odo& a, const Odo& b, const SpectralCurve& curve);

CommutingPair make_commuting_pair(const Odo& a, const Odo& b, Execution exec = Execution::parallel);
CurveGcrd gcrd_on_curve(const Odo& a, const Odo& b, Execution exec = Execution::parallel);
CurveGcrd gcrd_on_curve(const CommutingPair& pair, Execution exec = Execution::parallel);

// Replaces constant parameters by constant values living in a common target
// domain. Throws UnknownParameter or NonConstantValue.
Odo substitute_parametrization(const Odo& a, const std::map<Symbol, Element>& assignments);

// x^(-n) d (d - m) ... (d - m(n-1)) with d = x Dx over Q(x).
Odo euler_operator(unsigned n, unsigned m);
// A = Dx^2 - 2 wp, B = -Dx^3 + 3 wp Dx + 3/2 wpp over the Weierstrass field.
std::pair<Odo, Odo> lame_pair();

// f(A, B) == 0 with lambda -> A, mu -> B.
bool verify_bc_identity(const CommutingPair& pair);
bool verify_bc_identity(const Odo& a, const Odo& b, const SpectralCurve& curve);

}  // namespace diffsres

#pragma once

#include <cstdint>
#include <string>

#include "diffsres/domain.hpp"

namespace diffsres::testing {

struct Report {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what);
  bool passed() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

// Leibniz, linearity, quotient rule, canonicality and associativity of
// element arithmetic, plus associativity and distributivity of the Ore
// product, on `count` random elements of dom.
Report arithmetic_suite(const DomainPtr& dom, int count, std::uint64_t seed);
// Cofactor, fraction-free (serial and parallel) and permutation-sum
// determinants agree.
Report determinant_suite(const DomainPtr& dom, std::size_t size, int count, std::uint64_t seed);
// resultant != 0 iff euclid_gcrd has order 0, on pairs of orders <= 3 over
// Q(x); half of the pairs carry a planted common factor.
Report coprimality_suite(int count, std::uint64_t seed);
// Planted factor F of order d in {1, 2} with coprime cofactors: subresultants
// below d vanish, sres_d does not, and its monic form is monic(F).
Report gap_suite(int count, std::uint64_t seed);
// P A + Q B = resultant with order(P) < m, order(Q) < n.
Report bezout_suite(int count, std::uint64_t seed);
// parse(render(A)) == A on random operators of each sample domain.
Report roundtrip_suite(int count, std::uint64_t seed);

}  // namespace diffsres::testing

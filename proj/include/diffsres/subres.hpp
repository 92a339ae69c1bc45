#pragma once

#include <vector>

#include "diffsres/matrix.hpp"
#include "diffsres/operator.hpp"

namespace diffsres {

// i-th subresultant together with the square minors whose determinants are
// its coefficients (minors[j] gives the coefficient of D^j).
struct SubresultantRecord {
  int index;
  Odo op;
  std::vector<DiffMatrix> minors;
};

struct BezoutPair {
  Odo p;
  Odo q;
};

struct PdetResult {
  Odo op;
  std::vector<DiffMatrix> minors;
};

// Coefficient vector of A in the basis 1, D, ..., D^(size-1), written with
// descending powers left to right.
std::vector<Element> descending_coefficients(const Odo& a, std::size_t size);

// Rows D^(m-1)A, ..., A, D^(n-1)B, ..., B in descending-power columns.
DiffMatrix sylvester(const Odo& a, const Odo& b);
Element resultant(const Odo& a, const Odo& b, Execution exec = Execution::parallel);

// Sylvester matrix with the first i rows of each block and the leftmost i
// columns removed; (n+m-2i) x (n+m-i). Requires 0 <= i < min(n, m).
DiffMatrix subres_matrix(const Odo& a, const Odo& b, int i);

// Determinant polynomial of an r x c matrix (r <= c): the coefficient of D^j
// is det(C_1 | ... | C_(r-1) | C_(c-j)). The minors are independent and are
// evaluated concurrently under Execution::parallel.
PdetResult pdet(const DiffMatrix& m, Execution exec = Execution::parallel);

SubresultantRecord subresultant(const Odo& a, const Odo& b, int i, Execution exec = Execution::parallel);
// Records for i = 0 .. min(n, m) - 1.
std::vector<SubresultantRecord> subresultant_sequence(const Odo& a, const Odo& b,
                                                      Execution exec = Execution::parallel);

// P A + Q B = resultant(A, B) from the last-column expansion of the
// Sylvester matrix; the identity is checked before returning.
BezoutPair bezout_cofactors(const Odo& a, const Odo& b, Execution exec = Execution::parallel);

// Monic gcrd as the first nonvanishing subresultant.
Odo gcrd_subres(const Odo& a, const Odo& b, Execution exec = Execution::parallel);

}  // namespace diffsres

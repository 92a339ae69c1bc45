#include "diffsres/subres.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "diffsres/errors.hpp"

namespace diffsres {

namespace {

void require_same(const Odo& a, const Odo& b) {
  if (!same_domain(a.domain(), b.domain())) {
    throw Error(ErrorCode::DomainMismatch, a.domain()->spec() + " vs " + b.domain()->spec());
  }
}

void require_nonzero(const Odo& a, const Odo& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroOperand, "operand is the zero operator");
}

// Runs body(k) for k in [0, count), collecting the first exception.
template <typename Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  std::exception_ptr failure;
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel && n > 1)
  for (long k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(diffsres_subres_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Rows D^(rows_a-1) A .. A, D^(rows_b-1) B .. B in a basis of the given size.
DiffMatrix block_matrix(const Odo& a, std::size_t rows_a, const Odo& b, std::size_t rows_b, std::size_t size) {
  DiffMatrix m(a.domain(), rows_a + rows_b, size);
  auto fill = [&](const Odo& op, std::size_t count, std::size_t first_row) {
    if (count == 0) return;
    std::vector<Odo> shifted{op};
    for (std::size_t k = 1; k < count; ++k) shifted.push_back(shifted.back().d_times());
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Element> row = descending_coefficients(shifted[count - 1 - k], size);
      for (std::size_t c = 0; c < size; ++c) m(first_row + k, c) = std::move(row[c]);
    }
  };
  fill(a, rows_a, 0);
  fill(b, rows_b, rows_a);
  return m;
}

}  // namespace

std::vector<Element> descending_coefficients(const Odo& a, std::size_t size) {
  if (a.order() >= static_cast<int>(size)) {
    throw Error(ErrorCode::IndexOutOfRange, "operator of order " + std::to_string(a.order()) +
                                                " does not fit a basis of size " + std::to_string(size));
  }
  std::vector<Element> row(size, Element::zero(a.domain()));
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) row[size - 1 - k] = a.coefficients()[k];
  return row;
}

DiffMatrix sylvester(const Odo& a, const Odo& b) {
  require_same(a, b);
  require_nonzero(a, b);
  const auto n = static_cast<std::size_t>(a.order());
  const auto m = static_cast<std::size_t>(b.order());
  if (n + m == 0) throw Error(ErrorCode::BothConstant, "both operators have order 0");
  return block_matrix(a, m, b, n, n + m);
}

Element resultant(const Odo& a, const Odo& b, Execution exec) {
  return determinant(sylvester(a, b), DetBackend::automatic, exec);
}

DiffMatrix subres_matrix(const Odo& a, const Odo& b, int i) {
  require_same(a, b);
  require_nonzero(a, b);
  const int n = a.order();
  const int m = b.order();
  if (i < 0 || i > std::min(n, m) - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "subresultant index " + std::to_string(i) + " outside [0, " +
                                                std::to_string(std::min(n, m) - 1) + "]");
  }
  const auto k = static_cast<std::size_t>(i);
  return block_matrix(a, static_cast<std::size_t>(m) - k, b, static_cast<std::size_t>(n) - k,
                      static_cast<std::size_t>(n + m) - k);
}

PdetResult pdet(const DiffMatrix& mat, Execution exec) {
  const std::size_t r = mat.rows();
  const std::size_t c = mat.cols();
  if (r > c) {
    throw Error(ErrorCode::RowsExceedCols, std::to_string(r) + " rows exceed " + std::to_string(c) + " columns");
  }
  if (r == 0) throw Error(ErrorCode::IndexOutOfRange, "determinant polynomial of an empty matrix");
  const std::size_t count = c - r + 1;
  std::vector<DiffMatrix> minors;
  minors.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k + 1 < r; ++k) cols.push_back(k);
    cols.push_back(c - 1 - j);
    minors.push_back(mat.select_columns(cols));
  }
  std::vector<std::optional<Element>> dets(count);
  // Nested determinant kernels run serially inside the minor loop.
  const Execution inner = exec == Execution::parallel && count > 1 ? Execution::serial : exec;
  for_each_index(count, exec, [&](std::size_t j) { dets[j] = determinant(minors[j], DetBackend::automatic, inner); });
  std::vector<Element> coeffs;
  coeffs.reserve(count);
  for (auto& d : dets) coeffs.push_back(std::move(*d));
  return {Odo(mat.domain(), std::move(coeffs)), std::move(minors)};
}

SubresultantRecord subresultant(const Odo& a, const Odo& b, int i, Execution exec) {
  PdetResult p = pdet(subres_matrix(a, b, i), exec);
  return {i, std::move(p.op), std::move(p.minors)};
}

std::vector<SubresultantRecord> subresultant_sequence(const Odo& a, const Odo& b, Execution exec) {
  require_same(a, b);
  require_nonzero(a, b);
  const int count = std::min(a.order(), b.order());
  std::vector<std::optional<SubresultantRecord>> recs(static_cast<std::size_t>(std::max(count, 0)));
  const Execution inner = exec == Execution::parallel && count > 1 ? Execution::serial : exec;
  for_each_index(recs.size(), exec,
                 [&](std::size_t i) { recs[i] = subresultant(a, b, static_cast<int>(i), inner); });
  std::vector<SubresultantRecord> out;
  out.reserve(recs.size());
  for (auto& r : recs) out.push_back(std::move(*r));
  return out;
}

BezoutPair bezout_cofactors(const Odo& a, const Odo& b, Execution exec) {
  DiffMatrix syl = sylvester(a, b);
  const std::size_t n = static_cast<std::size_t>(a.order());
  const std::size_t m = static_cast<std::size_t>(b.order());
  const std::size_t size = n + m;
  const DomainPtr& dom = a.domain();

  // Signed cofactors of the last column.
  std::vector<std::optional<Element>> cof(size);
  const Execution inner = exec == Execution::parallel && size > 1 ? Execution::serial : exec;
  for_each_index(size, exec, [&](std::size_t k) {
    Element minor = determinant(syl.without(k, size - 1), DetBackend::automatic, inner);
    cof[k] = ((k + size - 1) % 2 == 0) ? minor : -minor;
  });

  std::vector<Element> p(m, Element::zero(dom));
  std::vector<Element> q(n, Element::zero(dom));
  // Row k < m carries D^(m-1-k) A; row m+j carries D^(n-1-j) B.
  for (std::size_t k = 0; k < m; ++k) p[m - 1 - k] = *cof[k];
  for (std::size_t j = 0; j < n; ++j) q[n - 1 - j] = *cof[m + j];
  BezoutPair out{Odo(dom, std::move(p)), Odo(dom, std::move(q))};

  Element res = Element::zero(dom);
  for (std::size_t k = 0; k < size; ++k) res += *cof[k] * syl(k, size - 1);
  Odo combo = out.p * a + out.q * b;
  if (!(combo == Odo(dom, {res})) || res != determinant(syl, DetBackend::automatic, exec)) {
    throw Error(ErrorCode::VerificationFailed, "P*A + Q*B does not reproduce the resultant");
  }
  return out;
}

Odo gcrd_subres(const Odo& a, const Odo& b, Execution exec) {
  require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroOperand, "gcrd of two zero operators");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.order() == 0 || b.order() == 0) return Odo::scalar(Element::one(a.domain()));
  const int count = std::min(a.order(), b.order());
  for (int i = 0; i < count; ++i) {
    SubresultantRecord rec = subresultant(a, b, i, exec);
    if (!rec.op.is_zero()) return rec.op.monic();
  }
  // Every subresultant vanishes: the lower-order operator divides the other.
  return euclid_gcrd(a, b);
}

}  // namespace diffsres

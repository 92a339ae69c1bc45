#include "diffsres/matrix.hpp"

#include <exception>

#include "diffsres/errors.hpp"
#include "diffsres/poly_gcd.hpp"

namespace diffsres {

DiffMatrix::DiffMatrix(DomainPtr domain, std::size_t rows, std::size_t cols)
    : domain_(std::move(domain)), rows_(rows), cols_(cols), entries_(rows * cols, Element::zero(domain_)) {}

DiffMatrix DiffMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  DiffMatrix out(domain_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
  }
  return out;
}

DiffMatrix DiffMatrix::without(std::size_t row, std::size_t col) const {
  DiffMatrix out(domain_, rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

std::string DiffMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

namespace {

void require_square(const DiffMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare,
                "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
}

Element cofactor_rec(const DiffMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Element::one(m.domain());
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Element acc = Element::zero(m.domain());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Element term = m(0, c) * cofactor_rec(m.without(0, c));
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Element determinant_cofactor(const DiffMatrix& m) {
  require_square(m);
  return cofactor_rec(m);
}

Element determinant_fraction_free(const DiffMatrix& m, Execution exec) {
  require_square(m);
  const std::size_t n = m.rows();
  const DomainPtr& dom = m.domain();
  if (n == 0) return Element::one(dom);
  const Domain& d = *dom;

  // Clear denominators row by row: row r is scaled by the lcm L_r.
  std::vector<MultiPoly> a(n * n);
  MultiPoly scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    MultiPoly l(1);
    for (std::size_t c = 0; c < n; ++c) {
      if (!m(r, c).den().is_one()) l = lcm(l, m(r, c).den());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Element& e = m(r, c);
      a[r * n + c] = e.den() == l ? e.num() : e.num() * diffsres::divide_exact(l, e.den());
    }
    // Integer entries keep the elimination on the mpz fast path.
    Integer z = 1;
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& t : a[r * n + c].terms()) mpz_lcm(z.get_mpz_t(), z.get_mpz_t(), t.second.get_den_mpz_t());
    }
    if (z != 1) {
      for (std::size_t c = 0; c < n; ++c) a[r * n + c] *= Rational(z);
      l *= Rational(z);
    }
    scale = scale * l;
  }
  auto at = [&](std::size_t r, std::size_t c) -> MultiPoly& { return a[r * n + c]; };

  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot: the nonzero entry with fewest terms.
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (!at(r, k).is_zero() && (piv == n || at(r, k).size() < at(piv, k).size())) piv = r;
    }
    if (piv == n) return Element::zero(dom);
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
      negate = !negate;
    }

    const auto rows = static_cast<long>(n - k - 1);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel && rows > 1)
    for (long i = 0; i < rows; ++i) {
      try {
        const std::size_t r = k + 1 + static_cast<std::size_t>(i);
        for (std::size_t c = k + 1; c < n; ++c) {
          MultiPoly v = d.reduce(at(r, c) * at(k, k) - at(r, k) * at(k, c));
          at(r, c) = prev.is_one() ? std::move(v) : d.divide_exact(v, prev);
        }
        at(r, k) = MultiPoly();
      } catch (...) {
#pragma omp critical(diffsres_det_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    prev = at(k, k);
  }
  MultiPoly det = at(n - 1, n - 1);
  if (negate) det = -det;
  return Element(dom, d.canonical(std::move(det), std::move(scale)));
}

Element determinant(const DiffMatrix& m, DetBackend backend, Execution exec) {
  require_square(m);
  switch (backend) {
    case DetBackend::cofactor:
      return determinant_cofactor(m);
    case DetBackend::fraction_free:
      return determinant_fraction_free(m, exec);
    case DetBackend::automatic:
      break;
  }
  return m.rows() <= 4 ? determinant_cofactor(m) : determinant_fraction_free(m, exec);
}

}  // namespace diffsres

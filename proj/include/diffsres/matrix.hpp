#pragma once

#include <string>
#include <vector>

#include "diffsres/domain.hpp"

namespace diffsres {

// Dense row-major matrix of domain elements.
class DiffMatrix {
 public:
  DiffMatrix(DomainPtr domain, std::size_t rows, std::size_t cols);

  const DomainPtr& domain() const { return domain_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  DiffMatrix select_columns(const std::vector<std::size_t>& cols) const;
  DiffMatrix without(std::size_t row, std::size_t col) const;

  friend bool operator==(const DiffMatrix& a, const DiffMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // One bracketed row per line.
  std::string to_string() const;

 private:
  DomainPtr domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

enum class Execution { serial, parallel };

enum class DetBackend {
  automatic,  // cofactor expansion up to 4x4, fraction-free elimination above
  cofactor,
  fraction_free,
};

// Exact determinant; throws NotSquare.
Element determinant(const DiffMatrix& m, DetBackend backend = DetBackend::automatic,
                    Execution exec = Execution::parallel);

// Laplace expansion along the first row, on field elements.
Element determinant_cofactor(const DiffMatrix& m);

// Bareiss elimination on the matrix with row denominators cleared, using
// exact divisions in the coefficient ring. The parallel variant splits the
// row updates of each elimination step across OpenMP threads.
Element determinant_fraction_free(const DiffMatrix& m, Execution exec = Execution::parallel);

}  // namespace diffsres

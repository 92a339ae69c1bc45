#pragma once

#include <climits>
#include <string>
#include <vector>

#include "diffsres/domain.hpp"

namespace diffsres {

// Ordinary differential operator sum_k c_k D^k over a coefficient domain.
// Coefficients are stored in ascending powers of D; the last one is nonzero
// unless the operator is zero (empty list, order neg_inf).
class Odo {
 public:
  static constexpr int neg_inf = INT_MIN;

  explicit Odo(DomainPtr domain) : domain_(std::move(domain)) {}
  Odo(DomainPtr domain, std::vector<Element> coeffs);

  static Odo scalar(const Element& c);
  // c * D^k
  static Odo monomial(const Element& c, unsigned k);
  static Odo derivation(DomainPtr domain);

  const DomainPtr& domain() const { return domain_; }
  int order() const { return coeffs_.empty() ? neg_inf : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  // Coefficient of D^k (zero beyond the order).
  Element coeff(std::size_t k) const;
  // Throws ZeroOperator for the zero operator.
  const Element& leading_coefficient() const;

  Odo operator-() const;
  friend Odo operator+(const Odo& a, const Odo& b);
  friend Odo operator-(const Odo& a, const Odo& b);
  // Ore product, D a = a D + a'.
  friend Odo operator*(const Odo& a, const Odo& b);
  friend bool operator==(const Odo& a, const Odo& b) { return a.coeffs_ == b.coeffs_; }

  // c * A (scalar on the left).
  Odo scaled_left(const Element& c) const;
  // D * A
  Odo d_times() const;
  // D^k * A
  Odo left_mul_dpow(unsigned k) const;
  Odo pow(unsigned e) const;
  // Leading coefficient 1; throws ZeroOperator.
  Odo monic() const;
  Odo lift(DomainPtr target) const;
  // Applies f to every coefficient.
  template <typename F>
  Odo map_coefficients(DomainPtr target, F&& f) const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Odo(std::move(target), std::move(out));
  }

  // "Dx^4 - 30/x*Dx^3 + ..." with descending powers.
  std::string to_string() const;

 private:
  void normalize();
  DomainPtr domain_;
  std::vector<Element> coeffs_;
};

struct DivisionResult {
  Odo quotient;
  Odo remainder;
};

// A = Q B + R with order(R) < order(B), in the fraction field.
DivisionResult right_divide(const Odo& a, const Odo& b);
// Monic greatest common right divisor by the Euclidean algorithm.
Odo euclid_gcrd(const Odo& a, const Odo& b);
// A B - B A
Odo commutator(const Odo& a, const Odo& b);

}  // namespace diffsres

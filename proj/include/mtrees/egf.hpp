#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtrees/exact.hpp"

namespace mtrees {

/// Truncated exponential generating function sum_{n<=order} c_n t^n / n!.
/// Coefficients are stored in the t^n/n! basis: operator[](n) is n! [t^n].
class EgfSeries {
 public:
  /// Order is coeffs.size() - 1; an empty list throws Error(invalid_order).
  explicit EgfSeries(std::vector<ExactRatio> coeffs);

  static EgfSeries zero(std::size_t order);
  /// The series t.
  static EgfSeries identity(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const ExactRatio& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const ExactRatio> coeffs() const noexcept { return coeffs_; }

  /// Truncates or zero-pads to the requested order.
  EgfSeries resized(std::size_t order) const;

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  std::vector<ExactRatio> coeffs_;
};

/// Binomial convolution; order is the smaller of the two.
EgfSeries egf_product(const EgfSeries& a, const EgfSeries& b);

/// 1/x(t) from the Bell-polynomial expansion of the geometric series in
/// (x(t) - x_0) / (-x_0). Same order as x.
EgfSeries egf_reciprocal_bell(const EgfSeries& x);

/// 1/x(t) by solving sum_j C(n, j) x_j y_{n-j} = [n == 0] term by term.
EgfSeries egf_reciprocal_oracle(const EgfSeries& x);

/// Integral from 0: an index shift to the right, order + 1.
EgfSeries egf_integrate(const EgfSeries& x);

/// Index shift to the left, order - 1. Throws Error(empty_series) at order 0.
EgfSeries egf_derivative(const EgfSeries& x);

/// outer(inner(t)) by Faa di Bruno: c_n = sum_k outer_k B_{n,k}(inner_1, ...).
/// Requires inner_0 = 0. Order is min(outer.order(), inner.order()).
EgfSeries egf_compose(const EgfSeries& outer, const EgfSeries& inner);

/// Same contract as egf_compose, evaluated as sum_k outer_k inner^k / k! with
/// truncated products (Horner form). Shares no code with the Bell route.
EgfSeries egf_compose_powers(const EgfSeries& outer, const EgfSeries& inner);

/// Compositional inverse by Lagrange inversion in Bell form:
///   y_1 = 1/x_1,
///   y_n = sum_{k=1}^{n-1} (-1)^k / x_1^{n+k} B_{n+k-1,k}(0, x_2, ..., x_n).
EgfSeries egf_comp_inverse_bell(const EgfSeries& x);

/// Compositional inverse solving egf_compose(x, y) = t one degree at a time.
EgfSeries egf_comp_inverse_oracle(const EgfSeries& x);

/// "order N" followed by one exact rational per line.
std::string to_text(const EgfSeries& series);
EgfSeries series_from_text(std::string_view text);

}  // namespace mtrees

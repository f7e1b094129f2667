#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mtrees/bell.hpp"
#include "mtrees/exact.hpp"

namespace mtrees {

/// Polynomial in the falling-factorial basis: sum_k coeff(k) (lambda)_k.
class FallingPoly {
 public:
  FallingPoly() = default;
  explicit FallingPoly(std::vector<ExactInt> coeffs);

  /// Zero past the stored coefficients.
  const ExactInt& operator[](std::size_t k) const noexcept;
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Largest k with a nonzero coefficient, -1 for the zero polynomial.
  long degree() const noexcept;

  friend bool operator==(const FallingPoly&, const FallingPoly&) = default;

 private:
  std::vector<ExactInt> coeffs_;
};

/// chi_m(K_n, lambda) = sum_{k=1}^n B_{n,k}(1_m) (lambda)_k.
/// K_0 maps to the zero polynomial, so chi_m(K_0, -1) = 0.
FallingPoly degree_chromatic_complete(unsigned m, unsigned n);

ExactInt eval_falling(const FallingPoly& p, const ExactInt& lambda);

/// sum_{k=1}^n (-1)^k k! B_{n,k}(1_m); zero for n = 0.
ExactInt chromatic_at_minus_one(unsigned m, unsigned n);

/// chromatic_at_minus_one(m, n) for n = 0..n_max from one Bell table.
std::vector<ExactInt> chromatic_at_minus_one_row(unsigned m, unsigned n_max);

inline constexpr std::uint64_t kDefaultColoringBound = 10'000'000;

/// Exhaustive count of lambda-colorings of K_n in which no color class has
/// more than m vertices. Throws Error(oracle_bound_exceeded) if lambda^n > bound.
ExactInt coloring_count_oracle(unsigned m, unsigned n, unsigned lambda,
                               std::uint64_t bound = kDefaultColoringBound);

/// a_0(m) .. a_{n_max}(m): coefficients of the reciprocal of the alternating
/// exponential partial sum sum_{k=0}^{2m-1} (-1)^k t^k / k!.
std::vector<ExactInt> gessel_sequence(unsigned m, unsigned n_max);

/// Entry [m-1][n-1] is chi_m(K_n, -1) for 1 <= m <= m_max, 1 <= n <= n_max.
std::vector<std::vector<ExactInt>> chromatic_table(unsigned m_max, unsigned n_max);

}  // namespace mtrees

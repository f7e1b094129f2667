#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "mtrees/error.hpp"

namespace mtrees {

using ExactInt = mpz_class;
using ExactRatio = mpq_class;

/// Parses an integer ("-12") or a fraction ("3/4", "-6/8"); the result is
/// canonical. Throws Error(parse_error) on anything else, including q = 0.
ExactRatio parse_ratio(std::string_view text);
ExactInt parse_int(std::string_view text);

/// Lowest terms, positive denominator, "p" when the denominator is 1.
std::string to_string(const ExactRatio& value);
std::string to_string(const ExactInt& value);

ExactInt factorial(unsigned n);

/// (x)_k = x (x - 1) ... (x - k + 1); (x)_0 = 1.
ExactInt falling_factorial(const ExactInt& x, unsigned k);

ExactRatio pow(const ExactRatio& base, unsigned exponent);

/// Throws Error(non_integer_result) unless the denominator is 1.
ExactInt to_integer(const ExactRatio& value);

// Pascal triangle, built once and read-only afterwards.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned n_max);

  unsigned n_max() const noexcept { return n_max_; }

  /// C(n, k); zero for k > n. n must not exceed n_max().
  const ExactInt& operator()(unsigned n, unsigned k) const;

 private:
  unsigned n_max_;
  std::vector<std::vector<ExactInt>> rows_;
  ExactInt zero_{0};
};

}  // namespace mtrees

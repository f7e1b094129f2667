#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtrees/exact.hpp"

namespace mtrees {

/// Argument sequence x_1, x_2, ... for a partial Bell polynomial.
///
/// Indexing is 1-based; any index past length() (and index 0) reads as zero,
/// so finitely supported sequences such as 1_m need no padding.
class ArgSeq {
 public:
  /// values[0] becomes x_1. Throws Error(empty_arguments) for an empty list.
  explicit ArgSeq(std::vector<ExactRatio> values);

  /// 1_m: m ones followed by zeros.
  static ArgSeq ones(std::size_t m);

  std::size_t length() const noexcept { return values_.size(); }
  const ExactRatio& operator[](std::size_t i) const noexcept;

  /// Every argument multiplied by c.
  ArgSeq scaled(const ExactRatio& c) const;

 private:
  std::vector<ExactRatio> values_;
};

/// B_{n,k}(args) for 0 <= k <= n <= n_max.
class BellTable {
 public:
  unsigned n_max() const noexcept { return n_max_; }

  /// Zero when k > n; n must not exceed n_max().
  const ExactRatio& at(unsigned n, unsigned k) const;
  std::span<const ExactRatio> row(unsigned n) const;

 private:
  friend BellTable bell_table(unsigned n_max, const ArgSeq& args);

  explicit BellTable(unsigned n_max) : n_max_(n_max), entries_(n_max + 1) {}

  unsigned n_max_;
  std::vector<std::vector<ExactRatio>> entries_;
  ExactRatio zero_{0};
};

inline constexpr unsigned kDefaultBellOracleBound = 25;

/// Partial Bell polynomial via
///   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
ExactRatio bell(unsigned n, unsigned k, const ArgSeq& args);

/// The defining sum over multiplicity vectors alpha with sum alpha_i = k and
/// sum i*alpha_i = n. Independent of the recurrence; used as an oracle.
/// Throws Error(oracle_bound_exceeded) when n > bound.
ExactRatio bell_definition_sum(unsigned n, unsigned k, const ArgSeq& args,
                               unsigned bound = kDefaultBellOracleBound);

BellTable bell_table(unsigned n_max, const ArgSeq& args);

}  // namespace mtrees

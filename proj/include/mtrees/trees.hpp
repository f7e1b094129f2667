#pragma once

#include <cstddef>
#include <vector>

#include "mtrees/egf.hpp"
#include "mtrees/exact.hpp"

namespace mtrees {

/// Degree weights x_0, x_1, ...: x_k weighs a vertex with k children.
class WeightSeq {
 public:
  explicit WeightSeq(std::vector<ExactRatio> weights);

  /// x_0 = ... = x_m = 1, zero beyond: the m-ary weights.
  static WeightSeq mary(unsigned m);

  /// Zero past the stored weights.
  const ExactRatio& operator[](std::size_t k) const noexcept;
  /// Largest index with a nonzero weight, -1 if all weights vanish.
  long support() const noexcept;

  /// x(t) truncated or zero-padded to the given order.
  EgfSeries as_series(std::size_t order) const;

 private:
  std::vector<ExactRatio> weights_;
};

/// T_1(m) .. T_{n_max}(m).
class TreeCountRow {
 public:
  TreeCountRow(unsigned m, std::vector<ExactInt> counts);

  unsigned m() const noexcept { return m_; }
  unsigned n_max() const noexcept { return static_cast<unsigned>(counts_.size()); }
  /// 1-based: at(1) is T_1(m).
  const ExactInt& at(unsigned n) const;
  const std::vector<ExactInt>& counts() const noexcept { return counts_; }

  friend bool operator==(const TreeCountRow&, const TreeCountRow&) = default;

 private:
  unsigned m_;
  std::vector<ExactInt> counts_;
};

/// p_1 .. p_{n_max}, the coefficients p_n = n! [t^n] P(t) of the weighted
/// increasing-tree generating function, in closed form:
///   b_s = [t^s/s!] 1/x(t),
///   p_1 = x_0,
///   p_n = sum_{k=1}^{n-1} (-1)^k x_0^{n+k} B_{n+k-1,k}(0, b_1, ..., b_{n-1}).
/// Throws Error(zero_leaf_weight) when x_0 = 0.
std::vector<ExactRatio> p_coefficients(const WeightSeq& x, unsigned n_max);

/// The same coefficients written as x_0^n sum_{k=0}^{n} (-x_0)^k B_{n+k-1,k}(...),
/// with the k range taken literally (no n = 1 special case).
std::vector<ExactRatio> p_coefficients_full_range(const WeightSeq& x, unsigned n_max);

/// T_n(m) = sum_{k=0}^{n} (-1)^k B_{n+k-1,k}(chi_m(K_0,-1), ..., chi_m(K_{n-1},-1)).
/// Throws Error(non_integer_result) if an entry is not an integer.
TreeCountRow count_mary_trees(unsigned m, unsigned n_max);

/// count_mary_trees through p_coefficients(WeightSeq::mary(m), n_max).
TreeCountRow count_mary_trees_generic(unsigned m, unsigned n_max);

/// p_1 .. p_{n_max} by stepping P'(t) = x(P(t)) one coefficient at a time.
std::vector<ExactRatio> ode_step_oracle(const WeightSeq& x, unsigned n_max);

struct InsertionOptions {
  unsigned bound = 10;
  /// Build every tree explicitly and verify it (n <= 7 only).
  bool materialize = false;
};

inline constexpr unsigned kMaterializeBound = 7;

/// Counts increasing trees on 1..n with out-degree <= m by attaching vertex
/// j = 2..n to any earlier vertex that still has spare capacity.
/// Throws Error(oracle_bound_exceeded) when n exceeds the bound.
ExactInt insertion_enum_oracle(unsigned m, unsigned n, const InsertionOptions& options = {});

/// Every m-ary increasing tree on 1..n as a parent array (parent[0] unused,
/// parent[1] = 0 for the root). n <= kMaterializeBound.
std::vector<std::vector<unsigned>> materialize_increasing_trees(unsigned m, unsigned n);

/// Euler zigzag numbers E_0 .. E_{n_max} from the boustrophedon triangle.
std::vector<ExactInt> euler_seidel_oracle(unsigned n_max);

}  // namespace mtrees

#include "mtrees/trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "mtrees/bell.hpp"
#include "mtrees/chromatic.hpp"

namespace mtrees {

namespace {

const ExactRatio kZero{0};

void require_positive(unsigned v, const char* what) {
  if (v == 0) throw Error(Errc::invalid_parameter, std::string(what) + " must be >= 1");
}

// B_{n+k-1,k}(0, b_1, ..., b_{n-1}) for all n <= n_max reads arguments up to
// index n_max, so a single table of size 2 n_max - 1 serves every n.
BellTable inversion_table(const std::vector<ExactRatio>& shifted_args, unsigned n_max) {
  return bell_table(2 * n_max - 1, ArgSeq(shifted_args));
}

// (0, b_1, ..., b_{n_max - 1}) from 1/x(t).
std::vector<ExactRatio> shifted_reciprocal(const WeightSeq& x, unsigned n_max) {
  const EgfSeries b = egf_reciprocal_bell(x.as_series(n_max - 1));
  std::vector<ExactRatio> args{ExactRatio(0)};
  for (std::size_t s = 1; s < n_max; ++s) args.push_back(b[s]);
  return args;
}

void require_leaf_weight(const WeightSeq& x) {
  if (x[0] == 0) throw Error(Errc::zero_leaf_weight, "x_0 must be nonzero");
}

using CapacityState = std::vector<unsigned>;  // count of placed vertices by out-degree < m

ExactInt count_insertions(CapacityState& state, unsigned remaining,
                          std::map<std::pair<CapacityState, unsigned>, ExactInt>& memo) {
  if (remaining == 0) return 1;
  auto key = std::make_pair(state, remaining);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const unsigned m = static_cast<unsigned>(state.size());
  ExactInt total = 0;
  for (unsigned d = 0; d < m; ++d) {
    if (state[d] == 0) continue;
    const unsigned choices = state[d];
    // The chosen parent moves from degree d to d + 1; the new vertex enters at 0.
    --state[d];
    if (d + 1 < m) ++state[d + 1];
    ++state[0];
    total += count_insertions(state, remaining - 1, memo) * choices;
    --state[0];
    if (d + 1 < m) --state[d + 1];
    ++state[d];
  }
  memo.emplace(std::move(key), total);
  return total;
}

void materialize_rec(unsigned m, unsigned n, unsigned next, std::vector<unsigned>& parent,
                     std::vector<unsigned>& degree, std::vector<std::vector<unsigned>>& out) {
  if (next > n) {
    out.push_back(parent);
    return;
  }
  for (unsigned p = 1; p < next; ++p) {
    if (degree[p] >= m) continue;
    parent[next] = p;
    ++degree[p];
    materialize_rec(m, n, next + 1, parent, degree, out);
    --degree[p];
  }
}

// Child sets, independent of insertion order; used to confirm distinctness.
std::vector<std::vector<unsigned>> children_of(const std::vector<unsigned>& parent) {
  std::vector<std::vector<unsigned>> children(parent.size());
  for (unsigned v = 2; v < parent.size(); ++v) children[parent[v]].push_back(v);
  for (auto& c : children) std::sort(c.begin(), c.end());
  return children;
}

}  // namespace

WeightSeq::WeightSeq(std::vector<ExactRatio> weights) : weights_(std::move(weights)) {}

WeightSeq WeightSeq::mary(unsigned m) {
  return WeightSeq(std::vector<ExactRatio>(m + 1, ExactRatio(1)));
}

const ExactRatio& WeightSeq::operator[](std::size_t k) const noexcept {
  return k < weights_.size() ? weights_[k] : kZero;
}

long WeightSeq::support() const noexcept {
  for (std::size_t k = weights_.size(); k-- > 0;) {
    if (weights_[k] != 0) return static_cast<long>(k);
  }
  return -1;
}

EgfSeries WeightSeq::as_series(std::size_t order) const {
  std::vector<ExactRatio> c(order + 1, ExactRatio(0));
  for (std::size_t k = 0; k <= order && k < weights_.size(); ++k) c[k] = weights_[k];
  return EgfSeries(std::move(c));
}

TreeCountRow::TreeCountRow(unsigned m, std::vector<ExactInt> counts)
    : m_(m), counts_(std::move(counts)) {}

const ExactInt& TreeCountRow::at(unsigned n) const {
  if (n == 0 || n > counts_.size()) throw Error(Errc::invalid_parameter, "tree count index out of range");
  return counts_[n - 1];
}

std::vector<ExactRatio> p_coefficients(const WeightSeq& x, unsigned n_max) {
  require_leaf_weight(x);
  require_positive(n_max, "n_max");
  const BellTable bell = inversion_table(shifted_reciprocal(x, n_max), n_max);

  const ExactRatio& x0 = x[0];
  std::vector<ExactRatio> p;
  p.reserve(n_max);
  p.push_back(x0);
  for (unsigned n = 2; n <= n_max; ++n) {
    ExactRatio acc = 0;
    for (unsigned k = 1; k <= n - 1; ++k) {
      const ExactRatio& b = bell.at(n + k - 1, k);
      if (b == 0) continue;
      ExactRatio term = pow(x0, n + k) * b;
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    p.push_back(std::move(acc));
  }
  return p;
}

std::vector<ExactRatio> p_coefficients_full_range(const WeightSeq& x, unsigned n_max) {
  require_leaf_weight(x);
  require_positive(n_max, "n_max");
  const BellTable bell = inversion_table(shifted_reciprocal(x, n_max), n_max);

  const ExactRatio& x0 = x[0];
  const ExactRatio neg_x0 = -x0;
  std::vector<ExactRatio> p;
  p.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    ExactRatio acc = 0;
    for (unsigned k = 0; k <= n; ++k) acc += pow(neg_x0, k) * bell.at(n + k - 1, k);
    p.push_back(pow(x0, n) * acc);
  }
  return p;
}

TreeCountRow count_mary_trees(unsigned m, unsigned n_max) {
  require_positive(m, "m");
  require_positive(n_max, "n_max");
  // chi_m(K_0, -1) = 0 occupies the first argument slot.
  const std::vector<ExactInt> chi = chromatic_at_minus_one_row(m, n_max - 1);
  std::vector<ExactRatio> args(chi.begin(), chi.end());
  const BellTable bell = inversion_table(args, n_max);

  std::vector<ExactInt> counts;
  counts.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    ExactRatio acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
      if (k % 2 == 0) {
        acc += bell.at(n + k - 1, k);
      } else {
        acc -= bell.at(n + k - 1, k);
      }
    }
    counts.push_back(to_integer(acc));
  }
  return TreeCountRow(m, std::move(counts));
}

TreeCountRow count_mary_trees_generic(unsigned m, unsigned n_max) {
  require_positive(m, "m");
  const std::vector<ExactRatio> p = p_coefficients(WeightSeq::mary(m), n_max);
  std::vector<ExactInt> counts;
  counts.reserve(p.size());
  for (const auto& v : p) counts.push_back(to_integer(v));
  return TreeCountRow(m, std::move(counts));
}

std::vector<ExactRatio> ode_step_oracle(const WeightSeq& x, unsigned n_max) {
  require_positive(n_max, "n_max");
  std::vector<ExactRatio> p(n_max + 1, ExactRatio(0));  // p[0] = P(0) = 0
  p[1] = x[0];
  for (unsigned n = 1; n < n_max; ++n) {
    // p_{n+1} = [t^n/n!] x(P(t)); only p_1..p_n enter that coefficient.
    const EgfSeries inner(std::vector<ExactRatio>(p.begin(), p.begin() + n + 1));
    p[n + 1] = egf_compose_powers(x.as_series(n), inner)[n];
  }
  return std::vector<ExactRatio>(p.begin() + 1, p.end());
}

ExactInt insertion_enum_oracle(unsigned m, unsigned n, const InsertionOptions& options) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (n > options.bound) {
    throw Error(Errc::oracle_bound_exceeded,
                "insertion enumeration limited to n <= " + std::to_string(options.bound));
  }
  CapacityState state(m, 0);
  state[0] = 1;  // the root
  std::map<std::pair<CapacityState, unsigned>, ExactInt> memo;
  const ExactInt counted = count_insertions(state, n - 1, memo);

  if (!options.materialize) return counted;

  const auto trees = materialize_increasing_trees(m, n);
  std::set<std::vector<std::vector<unsigned>>> distinct;
  for (const auto& parent : trees) {
    const auto children = children_of(parent);
    for (unsigned v = 2; v <= n; ++v) {
      if (parent[v] >= v) throw Error(Errc::oracle_mismatch, "materialized tree is not increasing");
    }
    for (const auto& c : children) {
      if (c.size() > m) throw Error(Errc::oracle_mismatch, "materialized tree exceeds out-degree m");
    }
    distinct.insert(children);
  }
  const ExactInt materialized(static_cast<unsigned long>(distinct.size()));
  if (materialized != counted || distinct.size() != trees.size()) {
    throw Error(Errc::oracle_mismatch, "materialized " + to_string(materialized) +
                                           " trees, recursion counted " + to_string(counted));
  }
  return materialized;
}

std::vector<std::vector<unsigned>> materialize_increasing_trees(unsigned m, unsigned n) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (n > kMaterializeBound) {
    throw Error(Errc::oracle_bound_exceeded,
                "materialization limited to n <= " + std::to_string(kMaterializeBound));
  }
  std::vector<unsigned> parent(n + 1, 0);
  std::vector<unsigned> degree(n + 1, 0);
  std::vector<std::vector<unsigned>> out;
  materialize_rec(m, n, 2, parent, degree, out);
  return out;
}

std::vector<ExactInt> euler_seidel_oracle(unsigned n_max) {
  std::vector<ExactInt> euler{ExactInt(1)};
  std::vector<ExactInt> prev{ExactInt(1)};
  for (unsigned k = 1; k <= n_max; ++k) {
    std::vector<ExactInt> cur(k + 1, ExactInt(0));
    for (unsigned i = 1; i <= k; ++i) cur[i] = cur[i - 1] + prev[k - i];
    euler.push_back(cur[k]);
    prev = std::move(cur);
  }
  return euler;
}

}  // namespace mtrees

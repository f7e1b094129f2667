#include "mtrees/bell.hpp"

#include <utility>

namespace mtrees {

namespace {

const ExactRatio kZero{0};

// Accumulates the contribution of alpha_j, alpha_{j+1}, ... given the
// remaining block count and remaining element count.
void definition_sum_rec(unsigned j, unsigned blocks_left, unsigned size_left,
                        const ArgSeq& args, const ExactRatio& weight, ExactRatio& total) {
  if (blocks_left == 0) {
    if (size_left == 0) total += weight;
    return;
  }
  // Every remaining block has size >= j.
  if (size_left < static_cast<unsigned long>(j) * blocks_left) return;

  const ExactRatio term = args[j] / ExactRatio(factorial(j));
  ExactRatio w = weight;
  for (unsigned a = 0; a <= blocks_left && a * j <= size_left; ++a) {
    if (a > 0) {
      w *= term;
      w /= a;
    }
    definition_sum_rec(j + 1, blocks_left - a, size_left - a * j, args, w, total);
    if (w == 0) break;
  }
}

}  // namespace

ArgSeq::ArgSeq(std::vector<ExactRatio> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::empty_arguments, "argument sequence needs length >= 1");
}

ArgSeq ArgSeq::ones(std::size_t m) {
  return ArgSeq(std::vector<ExactRatio>(m, ExactRatio(1)));
}

const ExactRatio& ArgSeq::operator[](std::size_t i) const noexcept {
  if (i == 0 || i > values_.size()) return kZero;
  return values_[i - 1];
}

ArgSeq ArgSeq::scaled(const ExactRatio& c) const {
  std::vector<ExactRatio> out = values_;
  for (auto& v : out) v *= c;
  return ArgSeq(std::move(out));
}

const ExactRatio& BellTable::at(unsigned n, unsigned k) const {
  if (n > n_max_) throw Error(Errc::invalid_parameter, "Bell table row beyond n_max");
  if (k > n) return zero_;
  return entries_[n][k];
}

std::span<const ExactRatio> BellTable::row(unsigned n) const {
  if (n > n_max_) throw Error(Errc::invalid_parameter, "Bell table row beyond n_max");
  return entries_[n];
}

BellTable bell_table(unsigned n_max, const ArgSeq& args) {
  BellTable table(n_max);
  const BinomialTable binom(n_max);
  auto& e = table.entries_;
  for (unsigned n = 0; n <= n_max; ++n) {
    e[n].assign(n + 1, ExactRatio(0));
    if (n == 0) {
      e[0][0] = 1;
      continue;
    }
    for (unsigned k = 1; k <= n; ++k) {
      ExactRatio acc = 0;
      for (unsigned i = 1; i <= n - k + 1; ++i) {
        const ExactRatio& x = args[i];
        if (x == 0) continue;
        const ExactRatio& prev = e[n - i][k - 1];
        if (prev == 0) continue;
        acc += ExactRatio(binom(n - 1, i - 1)) * x * prev;
      }
      e[n][k] = std::move(acc);
    }
  }
  return table;
}

ExactRatio bell(unsigned n, unsigned k, const ArgSeq& args) {
  if (k > n) return 0;
  return bell_table(n, args).at(n, k);
}

ExactRatio bell_definition_sum(unsigned n, unsigned k, const ArgSeq& args, unsigned bound) {
  if (n > bound) {
    throw Error(Errc::oracle_bound_exceeded,
                "definition sum limited to n <= " + std::to_string(bound));
  }
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here: the empty alpha
  if (k == 0) return 0;

  ExactRatio total = 0;
  definition_sum_rec(1, k, n, args, ExactRatio(factorial(n)), total);
  return total;
}

}  // namespace mtrees

#include "mtrees/chromatic.hpp"

#include <utility>

#include "mtrees/egf.hpp"

namespace mtrees {

namespace {

const ExactInt kZeroInt{0};

void require_m(unsigned m) {
  if (m == 0) throw Error(Errc::invalid_parameter, "m must be >= 1");
}

}  // namespace

FallingPoly::FallingPoly(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {}

const ExactInt& FallingPoly::operator[](std::size_t k) const noexcept {
  return k < coeffs_.size() ? coeffs_[k] : kZeroInt;
}

long FallingPoly::degree() const noexcept {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != 0) return static_cast<long>(k);
  }
  return -1;
}

FallingPoly degree_chromatic_complete(unsigned m, unsigned n) {
  require_m(m);
  if (n == 0) return FallingPoly({ExactInt(0)});
  const BellTable bell = bell_table(n, ArgSeq::ones(m));
  std::vector<ExactInt> coeffs(n + 1, ExactInt(0));
  for (unsigned k = 1; k <= n; ++k) coeffs[k] = to_integer(bell.at(n, k));
  return FallingPoly(std::move(coeffs));
}

ExactInt eval_falling(const FallingPoly& p, const ExactInt& lambda) {
  ExactInt total = 0;
  ExactInt falling = 1;  // (lambda)_k
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) falling *= lambda - static_cast<unsigned long>(k - 1);
    total += p[k] * falling;
  }
  return total;
}

std::vector<ExactInt> chromatic_at_minus_one_row(unsigned m, unsigned n_max) {
  require_m(m);
  const BellTable bell = bell_table(n_max, ArgSeq::ones(m));
  std::vector<ExactInt> row(n_max + 1, ExactInt(0));
  for (unsigned n = 1; n <= n_max; ++n) {
    ExactInt acc = 0;
    ExactInt signed_factorial = 1;  // (-1)^k k!
    for (unsigned k = 1; k <= n; ++k) {
      signed_factorial *= -static_cast<long>(k);
      acc += signed_factorial * to_integer(bell.at(n, k));
    }
    row[n] = std::move(acc);
  }
  return row;
}

ExactInt chromatic_at_minus_one(unsigned m, unsigned n) {
  return chromatic_at_minus_one_row(m, n)[n];
}

ExactInt coloring_count_oracle(unsigned m, unsigned n, unsigned lambda, std::uint64_t bound) {
  require_m(m);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (lambda != 0 && total > bound / lambda) {
      throw Error(Errc::oracle_bound_exceeded,
                  "lambda^n exceeds the coloring bound " + std::to_string(bound));
    }
    total *= lambda;
  }
  if (total > bound) {
    throw Error(Errc::oracle_bound_exceeded,
                "lambda^n exceeds the coloring bound " + std::to_string(bound));
  }
  if (n == 0) return 1;
  if (lambda == 0) return 0;

  // Mixed-radix counter over colors, histogram kept in step with it.
  std::vector<unsigned> color(n, 0);
  std::vector<unsigned> histogram(lambda, 0);
  histogram[0] = n;
  unsigned over = n > m ? 1 : 0;  // number of colors used more than m times
  std::uint64_t legal = 0;

  auto bump = [&](unsigned c, int delta) {
    const bool was_over = histogram[c] > m;
    histogram[c] = static_cast<unsigned>(static_cast<int>(histogram[c]) + delta);
    const bool is_over = histogram[c] > m;
    if (was_over && !is_over) --over;
    if (!was_over && is_over) ++over;
  };

  while (true) {
    if (over == 0) ++legal;
    unsigned pos = 0;
    while (pos < n && color[pos] + 1 == lambda) {
      bump(color[pos], -1);
      color[pos] = 0;
      bump(0, +1);
      ++pos;
    }
    if (pos == n) break;
    bump(color[pos], -1);
    ++color[pos];
    bump(color[pos], +1);
  }
  return ExactInt(static_cast<unsigned long>(legal));
}

std::vector<ExactInt> gessel_sequence(unsigned m, unsigned n_max) {
  require_m(m);
  // (-1)^k for k <= 2m - 1 in the t^k/k! basis.
  std::vector<ExactRatio> partial(n_max + 1, ExactRatio(0));
  for (unsigned k = 0; k <= n_max && k <= 2 * m - 1; ++k) partial[k] = (k % 2 == 0) ? 1 : -1;

  const EgfSeries recip = egf_reciprocal_bell(EgfSeries(std::move(partial)));
  std::vector<ExactInt> out;
  out.reserve(n_max + 1);
  for (const auto& c : recip.coeffs()) out.push_back(to_integer(c));
  return out;
}

std::vector<std::vector<ExactInt>> chromatic_table(unsigned m_max, unsigned n_max) {
  std::vector<std::vector<ExactInt>> table;
  table.reserve(m_max);
  for (unsigned m = 1; m <= m_max; ++m) {
    std::vector<ExactInt> row = chromatic_at_minus_one_row(m, n_max);
    table.emplace_back(row.begin() + 1, row.end());
  }
  return table;
}

}  // namespace mtrees

#pragma once

// Test-only brute-force helpers. Nothing here calls into the library's Bell,
// EGF or tree code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Visits every set partition of {0..n-1} as a restricted growth string
// (block[i] = block index of element i, blocks numbered by first appearance).
inline void for_each_set_partition(unsigned n,
                                   const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> block(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
    if (i == n) {
      visit(block);
      return;
    }
    for (unsigned b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0) {
    visit(block);
    return;
  }
  block[0] = 0;
  rec(1, 1);
}

inline unsigned block_count(const std::vector<unsigned>& rgs) {
  return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
}

inline unsigned largest_block(const std::vector<unsigned>& rgs) {
  std::vector<unsigned> sizes(rgs.size() + 1, 0);
  for (unsigned b : rgs) ++sizes[b];
  return rgs.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

// Number of partitions of [n] into k blocks, each of size <= max_block.
inline std::uint64_t restricted_partitions(unsigned n, unsigned k, unsigned max_block) {
  std::uint64_t count = 0;
  for_each_set_partition(n, [&](const std::vector<unsigned>& rgs) {
    if (block_count(rgs) == k && largest_block(rgs) <= max_block) ++count;
  });
  return count;
}

inline std::uint64_t stirling2(unsigned n, unsigned k) { return restricted_partitions(n, k, n); }

// Pairs (partition P of [n], partition of the block set of P).
inline std::uint64_t two_level_partitions(unsigned n) {
  std::uint64_t count = 0;
  for_each_set_partition(n, [&](const std::vector<unsigned>& rgs) {
    std::uint64_t outer = 0;
    for_each_set_partition(block_count(rgs), [&](const std::vector<unsigned>&) { ++outer; });
    count += outer;
  });
  return count;
}

inline std::uint64_t bell_number(unsigned n) {
  std::uint64_t count = 0;
  for_each_set_partition(n, [&](const std::vector<unsigned>&) { ++count; });
  return count;
}

// Rationals p/q with p in [-9, 9], q in [1, 9].
class RandomRationals {
 public:
  explicit RandomRationals(std::uint32_t seed) : engine_(seed) {}

  mpq_class next() {
    mpq_class r(num_(engine_), den_(engine_));
    r.canonicalize();
    return r;
  }

  mpq_class next_nonzero() {
    mpq_class r = next();
    while (r == 0) r = next();
    return r;
  }

  unsigned uniform(unsigned lo, unsigned hi) {
    return std::uniform_int_distribution<unsigned>(lo, hi)(engine_);
  }

 private:
  std::mt19937 engine_;
  std::uniform_int_distribution<int> num_{-9, 9};
  std::uniform_int_distribution<int> den_{1, 9};
};

}  // namespace oracle

#pragma once

// Integer partition enumeration: all partitions, p-regular partitions
// (no part repeated p or more times), and hook detection. Counts are obtained
// by exhaustive generation, not closed formulas, so they double as oracles.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gol/exact.hpp"

namespace gol {

using Partition = std::vector<i64>;  // weakly decreasing positive parts

// All partitions of n in lexicographically decreasing order of part lists.
inline std::vector<Partition> partitions_of(i64 n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, i64 rest, i64 maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (i64 k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

inline bool is_p_regular(const Partition& lam, i64 p) {
  if (p < 1) throw std::invalid_argument("is_p_regular: p must be >= 1");
  i64 run = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    run = (i > 0 && lam[i] == lam[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

// Hook partition: (a, 1, 1, ..., 1).
inline bool is_hook(const Partition& lam) {
  if (lam.empty()) return false;
  for (std::size_t i = 1; i < lam.size(); ++i)
    if (lam[i] != 1) return false;
  return true;
}

inline i64 partition_count(i64 n) { return i64(partitions_of(n).size()); }

inline i64 p_regular_partition_count(i64 n, i64 p) {
  i64 c = 0;
  for (const auto& lam : partitions_of(n))
    if (is_p_regular(lam, p)) ++c;
  return c;
}

inline i64 hook_count(i64 n) {
  i64 c = 0;
  for (const auto& lam : partitions_of(n))
    if (is_hook(lam)) ++c;
  return c;
}

inline i64 non_hook_partition_count(i64 n) { return partition_count(n) - hook_count(n); }

// Binomial coefficient as exact i64; throws on overflow.
inline i64 binomial(i64 n, i64 k) {
  if (k == 0) return 1;  // for every integer n, so degree-0 terms always count once
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i64 r = 1;
  for (i64 i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step
    i64 num = n - k + i;
    if (r > ((i64(1) << 62) / num)) throw std::overflow_error("binomial: overflow");
    r = r * num / i;
  }
  return r;
}

}  // namespace gol

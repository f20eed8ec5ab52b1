#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gol {

// Multiplication table of the cyclic group C_n: table[i][j] = (i + j) mod n.
inline std::vector<std::vector<int>> cyclic_group_table(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic_group_table: n must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// Multiplication table of the symmetric group on n letters. Elements are the
// permutations of {0..n-1} in lexicographic order; the product sigma*tau acts
// as "apply tau first": (sigma*tau)(x) = sigma(tau(x)).
inline std::vector<std::vector<int>> symmetric_group_table(int n) {
  if (n <= 0 || n > 6) throw std::invalid_argument("symmetric_group_table: n in [1,6]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = int(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    return int(it - perms.begin());
  };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(comp);
    }
  return t;
}

}  // namespace gol

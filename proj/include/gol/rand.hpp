#pragma once

// Deterministic seeded randomness for property suites. mt19937_64 output is
// fully specified by the standard, so identical seeds give identical streams
// on every platform.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "gol/exact.hpp"

namespace gol {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
  // Uniform-ish value in [0, n); modulo bias is irrelevant at test moduli.
  i64 below(i64 n) {
    if (n <= 0) throw std::invalid_argument("SeededRng::below: n must be positive");
    return i64(eng_() % std::uint64_t(n));
  }
  i64 in_range(i64 lo, i64 hi) {  // inclusive bounds
    if (hi < lo) throw std::invalid_argument("SeededRng::in_range: empty range");
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gol

#pragma once

#include <random>
#include <vector>

#include "cbasis/orders.hpp"

namespace cbasis::testing {

inline std::vector<SignVector> all_signs(int n) {
  std::vector<SignVector> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SignVector s;
    for (int r = 0; r < n; ++r) s.push_back((mask >> r) & 1 ? Sign::minus : Sign::plus);
    out.push_back(s);
  }
  return out;
}

inline Tuple random_tuple(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Tuple t(n);
  for (int& x : t) x = d(rng);
  return t;
}

}  // namespace cbasis::testing

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "octamod/ints.hpp"

namespace octamod {

// (1-t)^6 * sum f(k) t^k, truncated high and checked stationary
std::vector<Int> hilbert_series_numerator();

struct BettiTable {
  std::map<std::pair<int, int>, Int> b;  // (i, j) -> b_{i,j}

  Int get(int i, int j) const;
  void set(int i, int j, Int v);
  std::string render() const;  // row/column layout, j down, i across
  friend bool operator==(const BettiTable& x, const BettiTable& y) {
    return x.b == y.b;
  }
};

// Derive the Betti table from the graded data: b_(1,1) quadric count, the
// degree-one syzygy count b_(2,1) (0 or 1 depending on characteristic), the
// Gorenstein symmetry b_(i,j) = b_(r-i, d+a-j) with r=8, d=6, a=-2, and the
// Euler characteristic identity against the Hilbert function, solved
// triangularly at k = 4..8 and checked at k = 2..10.
BettiTable betti_diagram(int quadrics, int linear_syzygies);

// dim of the irreducible sl(l+1)-module with the given fundamental-weight
// coefficients, by the Weyl dimension formula
Int weyl_dimension_A(int rank, const std::vector<int>& fundamental_coeffs);

}  // namespace octamod

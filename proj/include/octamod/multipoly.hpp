#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "octamod/combi.hpp"
#include "octamod/ints.hpp"

namespace octamod {

// Multihomogeneous polynomial in (x_p, y_p), p in {1..n}. A monomial is coded
// by its x-exponent digits a_p packed in base `base` with point 1 most
// significant; the y-exponent at p is degs[p-1] - a_p, so the per-point
// degree vector is shared by every term. base = max(degs) + 1 keeps the
// packing canonical, and keys of a product are sums of keys once both factors
// are packed in the product's base.
struct MultiPoly {
  int n = 0;
  std::vector<int> degs;  // per-point degree
  std::uint32_t base = 1;
  std::vector<std::pair<std::uint32_t, Int>> terms;  // sorted by key, no zeros

  bool is_zero() const { return terms.empty(); }
  std::size_t term_count() const { return terms.size(); }
  std::uint32_t leading_key() const;  // largest packed key
  const Int& leading_coeff() const;

  std::vector<int> unpack(std::uint32_t key) const;  // x-exponents per point

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  std::string to_string() const;
};

// x_i y_j - x_j y_i; zero when i == j
MultiPoly bracket(int i, int j, int n);

// product of edge brackets; zero iff the graph has a loop
MultiPoly expand_graph(const DirectedGraph& g);

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q);
MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly scale(const MultiPoly& p, const Int& c);

// relabel points: digit at sigma(p) <- digit at p
MultiPoly act_on_points(const Perm& sigma, const MultiPoly& p);

// X_g = X_g' + X_g'' for the two exchanges of edges e1, e2
bool plucker_identity_check(const DirectedGraph& g, std::size_t e1,
                            std::size_t e2);

// repack terms into a larger base (digits preserved)
std::vector<std::pair<std::uint32_t, Int>> repack_terms(const MultiPoly& p,
                                                        std::uint32_t to_base);

// sort + combine equal keys, dropping zeros
void normalize_terms(std::vector<std::pair<std::uint32_t, Int>>& t);

}  // namespace octamod

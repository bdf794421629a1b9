#pragma once

#include <map>
#include <vector>

#include "octamod/combi.hpp"
#include "octamod/ints.hpp"
#include "octamod/multipoly.hpp"

namespace octamod {

// Kempe basis bookkeeping for one point count n: the non-crossing matchings
// in lexicographic order, with straightening of arbitrary matchings into
// integer coordinates by Plucker moves.
class PlanarBasis {
 public:
  explicit PlanarBasis(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(planar_.size()); }
  const std::vector<Matching>& matchings() const { return planar_; }
  const Matching& matching(int i) const { return planar_[i]; }
  int planar_index(const Matching& canonical) const;

  // integer coordinates of X_m over the basis; accepts any directed matching
  std::vector<Int> straighten(const Matching& m) const;

  // independent oracle: exact triangular solve against the basis expansions
  // in the degree-one monomial space
  std::vector<Int> straighten_by_solve(const Matching& m) const;

  // degree-one expansions of the basis elements
  const std::vector<MultiPoly>& expansions() const;

  // columns are straighten(act(sigma, basis_i))
  std::vector<std::vector<Int>> action_matrix(const Perm& sigma) const;

  Int action_trace(const Perm& sigma) const;

 private:
  int n_;
  std::vector<Matching> planar_;
  std::map<std::vector<std::pair<int, int>>, int> planar_index_;
  mutable std::map<std::vector<std::pair<int, int>>, std::vector<Int>> memo_;
  mutable std::vector<MultiPoly> expansions_cache_;

  const std::vector<Int>& straighten_canonical(const Matching& canon) const;
};

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b);
std::vector<std::vector<Int>> mat_identity(int k);
Int mat_trace(const std::vector<std::vector<Int>>& a);

}  // namespace octamod

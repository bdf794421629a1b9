#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "octamod/ints.hpp"

namespace octamod {

// Monomials of degree d in `nvars` variables, ordered lexicographically by
// exponent vector, largest first (v1^d leads). Index <-> exponent vector.
struct SymBasis {
  int nvars = 0;
  int deg = 0;
  std::vector<std::vector<std::uint8_t>> expo;
  std::map<std::vector<std::uint8_t>, int> index;

  SymBasis() = default;
  SymBasis(int nvars_, int deg_);

  int size() const { return static_cast<int>(expo.size()); }
  int index_of(const std::vector<std::uint8_t>& e) const;
};

// dense exact coordinate vector over a SymBasis
using SymVector = std::vector<Int>;

// (sum_i v_i x_i)^d
SymVector power_of_linear(const std::vector<Int>& v, const SymBasis& target);

// formal partial; Euler identity sum_i x_i d_i f = d * f
SymVector partial_derivative(const SymVector& f, const SymBasis& from,
                             const SymBasis& to, int var);

SymVector mult_by_var(const SymVector& f, const SymBasis& from,
                      const SymBasis& to, int var);

// Degree-d action of the linear substitution x_i -> sum_a A[a][i] x_a.
SymVector apply_substitution(const std::vector<std::vector<Int>>& a,
                             const SymVector& f, const SymBasis& basis);

bool is_zero(const SymVector& v);
SymVector add(SymVector a, const SymVector& b);
SymVector sub(SymVector a, const SymVector& b);
SymVector scale(SymVector a, const Int& c);

// divide by content and make the first nonzero entry positive; returns the
// (signed) factor f such that input = f * output
Rat normalize_primitive(SymVector& v);

Int content(const SymVector& v);

}  // namespace octamod

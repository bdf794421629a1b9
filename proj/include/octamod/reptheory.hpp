#pragma once

#include <map>
#include <vector>

#include "octamod/combi.hpp"
#include "octamod/ints.hpp"

namespace octamod {

// Integer class function on conjugacy classes of S_n, keyed by cycle type in
// the order produced by conjugacy_classes(n).
struct CharacterVector {
  int n = 0;
  std::vector<Int> values;  // aligned with conjugacy_classes(n)

  const Int& at(const std::vector<ConjClass>& classes,
                const Partition& type) const;
};

// Murnaghan-Nakayama: chi_lambda(mu) by border-strip recursion (memoized).
Int mn_character(const Partition& lambda, const Partition& mu);

// dimension by the hook length formula
Int hook_dimension(const Partition& lambda);

CharacterVector character_of(const Partition& lambda, int n);

struct PowerTraces {
  CharacterVector sym2, alt2, sym3;
};

// Newton identities on the power-map traces t_k(sigma) = chi(sigma^k)
PowerTraces power_traces(const CharacterVector& chi);

// <chi_lambda, chi_m> = (1/n!) sum |c| chi_lambda(c) chi_m(c); must be a
// nonnegative integer
Int multiplicity(const Partition& lambda, const CharacterVector& chi_m);

// decomposition into irreducibles (partition, multiplicity), multiplicity > 0
std::vector<std::pair<Partition, Int>> decompose(const CharacterVector& chi);

CharacterVector char_add(const CharacterVector& a, const CharacterVector& b);
CharacterVector char_sub(const CharacterVector& a, const CharacterVector& b);

}  // namespace octamod

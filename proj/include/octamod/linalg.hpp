#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octamod/intmatrix.hpp"

namespace octamod {

// Row lattice in Hermite normal form: pivot columns strictly increasing,
// pivots positive, entries above a pivot reduced into [0, pivot).
struct Lattice {
  int ambient = 0;
  std::vector<SRow> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
  bool is_zero() const { return rows.empty(); }
  SparseMat to_matrix() const;
  bool contains(std::vector<Int> v) const;

  friend bool operator==(const Lattice& a, const Lattice& b);
};

Lattice full_lattice(int ambient);

// Hermite normal form of the row span (unimodular row operations only).
Lattice hnf(std::vector<SRow> rows, int ncols);
Lattice hnf(const SparseMat& m);

// Right kernel {v : m v = 0} as a saturated HNF lattice. Exact: the basis is
// produced by a unimodular transform on a spanning constraint subset and then
// verified against every row of m.
Lattice kernel_lattice(const SparseMat& m, std::uint64_t seed);

// Nonzero elementary divisors d1 | d2 | ... | dr.
std::vector<Int> smith_normal_form(const SparseMat& m);

// Dense variant returning verified unimodular transforms u*m*v = diag.
struct SnfTransforms {
  std::vector<Int> divisors;
  std::vector<std::vector<Int>> u, v;
};
SnfTransforms smith_normal_form_with_transforms(const SparseMat& m);

// All nonzero elementary divisors equal 1.
bool is_saturated(const SparseMat& rows);

// Sparse elimination over F_p (p < 2^31). `pivot_rows`/`pivot_cols`, when
// given, receive original indices of an r x r nonsingular-mod-p minor.
int rank_mod_p(const SparseMat& m, std::uint32_t p,
               std::vector<int>* pivot_rows = nullptr,
               std::vector<int>* pivot_cols = nullptr);

// Fraction-free determinant; destroys its argument. Parallel row updates.
Int bareiss_det(std::vector<std::vector<Int>>& a);

struct RankCertificate {
  int rank = 0;
  std::vector<int> minor_rows, minor_cols;
  std::string lower_method;  // echelon | bareiss | modular-minor
  int kernel_rank = 0;
};

// Certified exact rank: modular ranks over >= 3 deterministic primes, a
// verified nonzero r x r minor for the lower bound, and an exact kernel basis
// of co-rank size for the upper bound. Any gap is a hard error.
RankCertificate rank_exact(const SparseMat& m, std::uint64_t seed,
                           int bareiss_max = 420);

// Common kernel of the operators (square, acting on column vectors)
// intersected with `start`, computed by successive kernel intersection in
// batches of `batch` operators.
Lattice iterated_kernel(const std::vector<SparseMat>& ops, const Lattice& start,
                        std::uint64_t seed, int batch = 1);

SparseMat sparse_mul(const SparseMat& a, const SparseMat& b);
SparseMat submatrix_rows(const SparseMat& m, const std::vector<int>& rows);

}  // namespace octamod

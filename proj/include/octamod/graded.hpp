#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "octamod/linalg.hpp"
#include "octamod/straighten.hpp"
#include "octamod/sym.hpp"

namespace octamod {

// Evaluation matrix of Sym^d(V) -> R^(d): rows indexed by degree-d monomials
// in the planar generators, columns by degree-d monomial keys (base d+1,
// point 1 most significant, (d+1)^n columns). Values fit int32: a row's l1
// norm is at most 2^(#edges).
struct EvalMatrix {
  int npoints = 0;
  int d = 0;
  int nvars = 0;
  int nrows = 0;
  std::uint32_t ncols = 0;

  std::vector<std::size_t> row_ptr;  // CSR, columns ascending within a row
  std::vector<std::uint32_t> col;
  std::vector<std::int32_t> val;

  std::vector<std::size_t> col_ptr;  // CSC mirror (built on demand)
  std::vector<std::uint32_t> crow;
  std::vector<std::int32_t> cval;

  std::size_t nnz() const { return col.size(); }
  void build_csc();
  SRow row_as_srow(int i) const;
  SparseMat to_sparse() const;            // exact copy (small d only)
  SparseMat transpose_sparse() const;     // columns as constraint rows
  std::int32_t max_abs_value() const;

  void write_sms(std::ostream& os) const;
  void write_matrix_market(std::ostream& os) const;
  std::string digest() const;

  // rows with pairwise distinct trailing columns are independent
  int echelon_rank_lower_bound() const;
};

EvalMatrix build_eval_matrix(const PlanarBasis& pb, const SymBasis& sym);

// Rank of the matrix mod p via dense-accumulator column streaming. The
// returned pivot rows/columns index a square minor that the elimination
// proves nonsingular mod p (the basis is unitriangular on the pivot rows),
// which bounds the integer rank from below.
int eval_rank_mod_p(EvalMatrix& e, std::uint32_t p,
                    std::vector<std::uint32_t>* selected_cols = nullptr,
                    std::vector<int>* pivot_rows = nullptr);

// dense re-check of the same minor at another prime
bool eval_minor_nonsingular(EvalMatrix& e, const std::vector<int>& rows,
                            const std::vector<std::uint32_t>& cols,
                            std::uint32_t p);

// exact check that every lattice row is a left-kernel vector of e, by
// multimodular evaluation at primes whose product exceeds twice the entry
// bound nrows * max|w| * max|e|
void verify_left_kernel(EvalMatrix& e, const Lattice& lat, std::uint64_t seed);
bool verify_left_kernel_ok(EvalMatrix& e, const Lattice& lat,
                           std::uint64_t seed);

// The degree-d ideal piece as a certified saturated kernel lattice. If
// `seed_rows` is given those generators are HNF-reduced and certified to be
// the whole kernel (saturation + exact membership + rank sandwich); otherwise
// the kernel is extracted from an unimodular transform of the constraint
// columns and verified exactly.
Lattice ideal_piece(EvalMatrix& e, std::uint64_t seed,
                    std::optional<SparseMat> seed_rows = std::nullopt);

// image of a Sym^d coordinate vector in the polynomial ring (exact)
SparseMat image_in_R(const EvalMatrix& e, const SymVector& v);

// Howe's closed-form Hilbert function for n = 8
std::int64_t howe_hilbert(int k);

}  // namespace octamod

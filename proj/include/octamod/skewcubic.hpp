#pragma once

#include <cstdint>
#include <vector>

#include "octamod/graded.hpp"
#include "octamod/linalg.hpp"
#include "octamod/straighten.hpp"
#include "octamod/sym.hpp"

namespace octamod {

// signed sum of cubes of the canonical matchings, as raw integer coordinates
SymVector skew_sum_of_cubes(const PlanarBasis& pb, const SymBasis& sym3);

// signed sum over all directed matchings (16x the canonical sum)
SymVector skew_sum_of_cubes_directed(const PlanarBasis& pb,
                                     const SymBasis& sym3);

// n! * skew-average of the cube of one matching (integer vector; divide by
// n! to get the average)
SymVector skew_average_cube_scaled(const PlanarBasis& pb, const SymBasis& sym3,
                                   const Matching& m);

// matrix of the degree-d action of a on Sym^d(V), columns indexed by source
// monomials
SparseMat sym_action_matrix(const std::vector<std::vector<Int>>& a,
                            const SymBasis& sym);

// lattice of vectors with Sym^3(A(sigma)) v = sgn(sigma) v for the generators
// (1 2) and (1 2 ... n); expected rank 1
Lattice skew_invariant_lattice(const PlanarBasis& pb, const SymBasis& sym3,
                               std::uint64_t seed);

std::vector<SymVector> all_partials(const SymVector& f, const SymBasis& from,
                                    const SymBasis& to);

// rows v_i * d_j(c) in row-major (i,j) order; with_cubic appends c itself
SparseMat derivative_products(const SymVector& c, const SymBasis& sym2,
                              const SymBasis& sym3, bool with_cubic);

// one degree bump: rows v_k * m_r for r outer, k inner
SparseMat degree_bump(const SparseMat& rows, const SymBasis& from,
                      const SymBasis& to);

// annihilator of a cubic inside gl(V), as a lattice in the 196-dimensional
// endomorphism space (row-major E_ij coordinates)
Lattice gl_annihilator(const SymVector& cubic, const SymBasis& sym2,
                       const SymBasis& sym3, std::uint64_t seed);

// primitive integral S_n-invariant symmetric form on V (unique up to sign;
// trace normalized positive)
std::vector<std::vector<Int>> invariant_form(const PlanarBasis& pb,
                                             std::uint64_t seed);

// basis of {A : A^t B + B A = 0}, each element a full matrix
std::vector<std::vector<std::vector<Int>>> antisymmetric_basis(
    const std::vector<std::vector<Int>>& b, std::uint64_t seed);

// derivation action of a on Sym^3(V)
SparseMat derivation_matrix(const std::vector<std::vector<Int>>& a,
                            const SymBasis& sym3);

// lattice membership for all rows
bool rows_in_lattice(const SparseMat& rows, const Lattice& lat);

}  // namespace octamod

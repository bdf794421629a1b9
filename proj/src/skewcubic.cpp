#include "octamod/skewcubic.hpp"

#include <algorithm>
#include "octamod/modp.hpp"
#include <map>
#include <numeric>

#include "octamod/util.hpp"

namespace octamod {

SymVector skew_sum_of_cubes(const PlanarBasis& pb, const SymBasis& sym3) {
  auto matchings = enumerate_matchings(pb.n());
  std::vector<SymVector> cubes(matchings.size());
  parallel_for(matchings.size(), [&](std::size_t i) {
    auto cube = power_of_linear(pb.straighten(matchings[i]), sym3);
    if (matching_sign(matchings[i]) < 0)
      for (auto& c : cube) c.negate();
    cubes[i] = std::move(cube);
  });
  SymVector acc(sym3.size(), Int(0));
  for (const auto& c : cubes)
    for (int k = 0; k < sym3.size(); ++k) acc[k] += c[k];
  return acc;
}

SymVector skew_sum_of_cubes_directed(const PlanarBasis& pb,
                                     const SymBasis& sym3) {
  auto matchings = enumerate_matchings(pb.n());
  int half = pb.n() / 2;
  SymVector acc(sym3.size(), Int(0));
  for (const auto& m : matchings) {
    for (unsigned mask = 0; mask < (1u << half); ++mask) {
      Matching dir = m;
      for (int e = 0; e < half; ++e)
        if (mask & (1u << e)) std::swap(dir.edges[e].first, dir.edges[e].second);
      auto cube = power_of_linear(pb.straighten(dir), sym3);
      int s = matching_sign(dir);
      for (int k = 0; k < sym3.size(); ++k) {
        if (s < 0)
          acc[k] -= cube[k];
        else
          acc[k] += cube[k];
      }
    }
  }
  return acc;
}

SymVector skew_average_cube_scaled(const PlanarBasis& pb, const SymBasis& sym3,
                                   const Matching& m) {
  int n = pb.n();
  // cube of each canonical matching, built on demand
  std::map<std::vector<std::pair<int, int>>, SymVector> cube_memo;
  auto cube_of = [&](const Matching& canon) -> const SymVector& {
    auto it = cube_memo.find(canon.edges);
    if (it != cube_memo.end()) return it->second;
    auto cube = power_of_linear(pb.straighten(canon), sym3);
    return cube_memo.emplace(canon.edges, std::move(cube)).first->second;
  };

  SymVector acc(sym3.size(), Int(0));
  Perm sigma = Perm::identity(n);
  std::sort(sigma.img.begin(), sigma.img.end());
  do {
    int sgn = sigma.sign();
    auto [canon, flip] = canonical_matching(act(sigma, m));
    const auto& cube = cube_of(canon);
    // Sym3(A(sigma)) applied to the cube of m is the cube of straighten of
    // the image matching; edge flips scale the cube by the flip sign
    int s = sgn * flip;
    for (int k = 0; k < sym3.size(); ++k) {
      if (s < 0)
        acc[k] -= cube[k];
      else
        acc[k] += cube[k];
    }
  } while (std::next_permutation(sigma.img.begin(), sigma.img.end()));
  return acc;
}

SparseMat sym_action_matrix(const std::vector<std::vector<Int>>& a,
                            const SymBasis& sym) {
  int n = sym.size();
  SparseMat cols(n, n);  // row r = image of monomial r (transposed build)
  parallel_for(n, [&](std::size_t j) {
    SymVector unit(n, Int(0));
    unit[j] = Int(1);
    SymVector img = apply_substitution(a, unit, sym);
    for (int r = 0; r < n; ++r)
      if (!img[r].is_zero()) cols.rows[j].emplace_back(r, img[r]);
  });
  return cols.transpose();
}

Lattice skew_invariant_lattice(const PlanarBasis& pb, const SymBasis& sym3,
                               std::uint64_t seed) {
  int n = pb.n();
  Perm tr = Perm::identity(n);
  std::swap(tr.img[0], tr.img[1]);
  Perm cyc = Perm::identity(n);
  for (int i = 0; i < n; ++i) cyc.img[i] = (i + 1) % n + 1;

  std::vector<SRow> stacked;
  for (const Perm* g : {&tr, &cyc}) {
    SparseMat act_m = sym_action_matrix(pb.action_matrix(*g), sym3);
    Int sgn(g->sign());
    for (int r = 0; r < act_m.nrows; ++r) {
      SRow row = act_m.rows[r];
      row.emplace_back(r, -sgn);
      normalize_row(row);
      stacked.push_back(std::move(row));
    }
  }
  SparseMat constraints =
      SparseMat::from_rows(sym3.size(), std::move(stacked));

  // The signed sum of cubes is a candidate kernel element; a mod-p rank of
  // ncols - 1 caps the rational kernel at one dimension, so the saturated
  // kernel lattice is exactly the primitive multiple of the candidate.
  SymVector cand = skew_sum_of_cubes(pb, sym3);
  if (!is_zero(cand)) {
    normalize_primitive(cand);
    bool satisfied = true;
    for (const auto& row : constraints.rows)
      satisfied &= row_dot(row, cand).is_zero();
    auto primes = select_primes(seed, 1);
    int rk = rank_mod_p(constraints, primes[0]);
    if (satisfied && rk == constraints.ncols - 1) {
      SRow r;
      for (int i = 0; i < static_cast<int>(cand.size()); ++i)
        if (!cand[i].is_zero()) r.emplace_back(i, cand[i]);
      Lattice l;
      l.ambient = constraints.ncols;
      l.pivots.push_back(r.front().first);
      l.rows.push_back(std::move(r));
      return l;
    }
  }
  return kernel_lattice(constraints, seed);
}

std::vector<SymVector> all_partials(const SymVector& f, const SymBasis& from,
                                    const SymBasis& to) {
  std::vector<SymVector> out(from.nvars);
  for (int i = 0; i < from.nvars; ++i)
    out[i] = partial_derivative(f, from, to, i);
  return out;
}

SparseMat derivative_products(const SymVector& c, const SymBasis& sym2,
                              const SymBasis& sym3, bool with_cubic) {
  int k = sym3.nvars;
  auto parts = all_partials(c, sym3, sym2);
  SparseMat m(k * k + (with_cubic ? 1 : 0), sym3.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      SymVector row = mult_by_var(parts[j], sym2, sym3, i);
      SRow r;
      for (int t = 0; t < sym3.size(); ++t)
        if (!row[t].is_zero()) r.emplace_back(t, row[t]);
      m.rows[i * k + j] = std::move(r);
    }
  if (with_cubic) {
    SRow r;
    for (int t = 0; t < sym3.size(); ++t)
      if (!c[t].is_zero()) r.emplace_back(t, c[t]);
    m.rows[k * k] = std::move(r);
  }
  return m;
}

SparseMat degree_bump(const SparseMat& rows, const SymBasis& from,
                      const SymBasis& to) {
  SparseMat out(rows.nrows * from.nvars, to.size());
  parallel_for(rows.nrows, [&](std::size_t r) {
    for (int k = 0; k < from.nvars; ++k) {
      SRow nr;
      nr.reserve(rows.rows[r].size());
      for (const auto& [c, v] : rows.rows[r]) {
        auto e = from.expo[c];
        ++e[k];
        nr.emplace_back(to.index_of(e), v);
      }
      normalize_row(nr);
      out.rows[r * from.nvars + k] = std::move(nr);
    }
  });
  return out;
}

Lattice gl_annihilator(const SymVector& cubic, const SymBasis& sym2,
                       const SymBasis& sym3, std::uint64_t seed) {
  SparseMat d = derivative_products(cubic, sym2, sym3, false);
  return kernel_lattice(d.transpose(), seed);
}

std::vector<std::vector<Int>> invariant_form(const PlanarBasis& pb,
                                             std::uint64_t seed) {
  int n = pb.n();
  int k = pb.size();
  Perm tr = Perm::identity(n);
  std::swap(tr.img[0], tr.img[1]);
  Perm cyc = Perm::identity(n);
  for (int i = 0; i < n; ++i) cyc.img[i] = (i + 1) % n + 1;

  // unknowns b_{uv}, u <= v; equations (A^t B A - B)_{ij} = 0 for i <= j
  std::vector<std::pair<int, int>> unk;
  std::vector<std::vector<int>> unk_at(k, std::vector<int>(k));
  for (int u = 0; u < k; ++u)
    for (int v = u; v < k; ++v) {
      unk_at[u][v] = unk_at[v][u] = static_cast<int>(unk.size());
      unk.emplace_back(u, v);
    }

  std::vector<SRow> rows;
  for (const Perm* g : {&tr, &cyc}) {
    auto a = pb.action_matrix(*g);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        std::vector<Int> coef(unk.size(), Int(0));
        for (int u = 0; u < k; ++u)
          for (int v = 0; v < k; ++v)
            coef[unk_at[u][v]].addmul(a[u][i], a[v][j]);
        coef[unk_at[i][j]] -= Int(1);
        SRow r;
        for (std::size_t t = 0; t < unk.size(); ++t)
          if (!coef[t].is_zero())
            r.emplace_back(static_cast<std::int32_t>(t), coef[t]);
        rows.push_back(std::move(r));
      }
  }
  Lattice sol = kernel_lattice(
      SparseMat::from_rows(static_cast<int>(unk.size()), std::move(rows)),
      seed);
  require(sol.rank() == 1, "invariant form space is not one-dimensional");

  std::vector<std::vector<Int>> b(k, std::vector<Int>(k, Int(0)));
  for (const auto& [t, v] : sol.rows[0]) {
    auto [u, w] = unk[t];
    b[u][w] = v;
    b[w][u] = v;
  }
  Int trace(0);
  for (int i = 0; i < k; ++i) trace += b[i][i];
  require(!trace.is_zero(), "invariant form has zero trace");
  if (trace.sign() < 0)
    for (auto& row : b)
      for (auto& x : row) x.negate();
  return b;
}

std::vector<std::vector<std::vector<Int>>> antisymmetric_basis(
    const std::vector<std::vector<Int>>& b, std::uint64_t seed) {
  int k = static_cast<int>(b.size());
  // unknown A (k*k entries, row-major); equations (A^t B + B A)_{ij} = 0,
  // i <= j
  std::vector<SRow> rows;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      std::vector<Int> coef(k * k, Int(0));
      for (int t = 0; t < k; ++t) {
        coef[t * k + i] += b[t][j];  // (A^t B)_{ij} = sum_t A_{ti} B_{tj}
        coef[t * k + j] += b[i][t];  // (B A)_{ij} = sum_t B_{it} A_{tj}
      }
      SRow r;
      for (int t = 0; t < k * k; ++t)
        if (!coef[t].is_zero()) r.emplace_back(t, coef[t]);
      rows.push_back(std::move(r));
    }
  Lattice sol =
      kernel_lattice(SparseMat::from_rows(k * k, std::move(rows)), seed);
  std::vector<std::vector<std::vector<Int>>> out;
  for (const auto& row : sol.rows) {
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k, Int(0)));
    for (const auto& [t, v] : row) a[t / k][t % k] = v;
    out.push_back(std::move(a));
  }
  return out;
}

SparseMat derivation_matrix(const std::vector<std::vector<Int>>& a,
                            const SymBasis& sym3) {
  int k = sym3.nvars;
  int n = sym3.size();
  SparseMat by_source(n, n);
  parallel_for(n, [&](std::size_t src) {
    const auto& e = sym3.expo[src];
    SRow acc;
    for (int v = 0; v < k; ++v) {
      if (e[v] == 0) continue;
      // a acts as a derivation: x_v -> sum_u a[u][v] x_u in one factor
      for (int u = 0; u < k; ++u) {
        if (a[u][v].is_zero()) continue;
        auto e2 = e;
        --e2[v];
        ++e2[u];
        Int c = a[u][v] * Int(static_cast<int>(e[v]));
        acc.emplace_back(sym3.index_of(e2), std::move(c));
      }
    }
    normalize_row(acc);
    by_source.rows[src] = std::move(acc);
  });
  return by_source.transpose();
}

bool rows_in_lattice(const SparseMat& rows, const Lattice& lat) {
  std::vector<char> ok(rows.nrows, 1);
  parallel_for(rows.nrows, [&](std::size_t i) {
    std::vector<Int> v(rows.ncols, Int(0));
    for (const auto& [c, val] : rows.rows[i]) v[c] = val;
    if (!lat.contains(std::move(v))) ok[i] = 0;
  });
  for (auto o : ok)
    if (!o) return false;
  return true;
}

}  // namespace octamod

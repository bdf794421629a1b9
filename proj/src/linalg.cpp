#include "octamod/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "octamod/modp.hpp"
#include "octamod/util.hpp"

namespace octamod {

SparseMat Lattice::to_matrix() const {
  SparseMat m(rank(), ambient);
  m.rows = rows;
  return m;
}

bool Lattice::contains(std::vector<Int> v) const {
  require(static_cast<int>(v.size()) == ambient, "ambient mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int c = pivots[i];
    if (v[c].is_zero()) continue;
    Int q = Int::fdiv_q(v[c], rows[i].front().second);
    if (q.is_zero()) continue;
    for (const auto& [col, val] : rows[i]) v[col].submul(q, val);
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Lattice& a, const Lattice& b) {
  if (a.ambient != b.ambient || a.pivots != b.pivots) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != b.rows[i].size()) return false;
    for (std::size_t j = 0; j < a.rows[i].size(); ++j)
      if (a.rows[i][j].first != b.rows[i][j].first ||
          a.rows[i][j].second != b.rows[i][j].second)
        return false;
  }
  return true;
}

Lattice full_lattice(int ambient) {
  Lattice l;
  l.ambient = ambient;
  l.rows.resize(ambient);
  l.pivots.resize(ambient);
  for (int i = 0; i < ambient; ++i) {
    l.rows[i] = {{i, Int(1)}};
    l.pivots[i] = i;
  }
  return l;
}

// ---------------------------------------------------------------------------
// Hermite normal form

Lattice hnf(std::vector<SRow> rows, int ncols) {
  // rows migrate through buckets keyed by leading column as they get reduced
  std::vector<std::vector<int>> bucket(ncols);
  std::vector<SRow> pool = std::move(rows);
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!pool[i].empty()) bucket[pool[i].front().first].push_back(static_cast<int>(i));

  std::vector<int> pivot_of;  // row pool ids in pivot-column order
  std::vector<int> pivot_col;

  for (int col = 0; col < ncols; ++col) {
    auto& list = bucket[col];
    while (list.size() > 1) {
      // reducer: smallest |lead|, ties by sparsity
      std::size_t best = 0;
      for (std::size_t i = 1; i < list.size(); ++i) {
        int c = Int::cmp_abs(pool[list[i]].front().second,
                             pool[list[best]].front().second);
        if (c < 0 || (c == 0 && pool[list[i]].size() < pool[list[best]].size()))
          best = i;
      }
      std::swap(list[0], list[best]);
      const int a = list[0];
      std::vector<int> keep{a};
      for (std::size_t i = 1; i < list.size(); ++i) {
        int b = list[i];
        Int q = Int::ndiv_q(pool[b].front().second, pool[a].front().second);
        q.negate();
        row_axpy(pool[b], pool[a], q);
        if (pool[b].empty()) continue;
        int lead = pool[b].front().first;
        if (lead == col)
          keep.push_back(b);
        else
          bucket[lead].push_back(b);
      }
      list = std::move(keep);
    }
    if (!list.empty()) {
      int piv = list.front();
      if (pool[piv].front().second.sign() < 0) row_scale(pool[piv], Int(-1));
      pivot_of.push_back(piv);
      pivot_col.push_back(col);
      list.clear();
    }
  }

  // back-reduction: entries above each pivot into [0, pivot)
  for (std::size_t pi = 0; pi < pivot_of.size(); ++pi) {
    int c = pivot_col[pi];
    const Int& pval = pool[pivot_of[pi]].front().second;
    for (std::size_t ri = 0; ri < pi; ++ri) {
      SRow& r = pool[pivot_of[ri]];
      auto it = std::lower_bound(
          r.begin(), r.end(), c,
          [](const SEntry& e, int col) { return e.first < col; });
      if (it == r.end() || it->first != c) continue;
      Int q = Int::fdiv_q(it->second, pval);
      if (q.is_zero()) continue;
      q.negate();
      row_axpy(r, pool[pivot_of[pi]], q);
    }
  }

  Lattice out;
  out.ambient = ncols;
  out.pivots = std::move(pivot_col);
  out.rows.reserve(pivot_of.size());
  for (int id : pivot_of) out.rows.push_back(std::move(pool[id]));
  return out;
}

Lattice hnf(const SparseMat& m) {
  auto rows = m.rows;
  return hnf(std::move(rows), m.ncols);
}

// ---------------------------------------------------------------------------
// mod-p elimination

namespace {

using FpRow = std::vector<std::pair<std::int32_t, std::uint32_t>>;

FpRow to_fp(const SRow& r, std::uint32_t p) {
  FpRow out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) {
    std::uint32_t x = v.mod_u32(p);
    if (x) out.emplace_back(c, x);
  }
  return out;
}

// dst -= dst[src.lead] * src, assuming src.lead is normalized to 1
void fp_eliminate(FpRow& dst, const FpRow& src, std::uint32_t factor,
                  std::uint32_t p) {
  FpRow out;
  out.reserve(dst.size() + src.size());
  std::uint32_t neg = p - factor;
  ShoupMul m(neg, p);
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i >= dst.size() || src[j].first < dst[i].first) {
      std::uint32_t v = m.mul(src[j].second);
      if (v) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      std::uint64_t v = dst[i].second + static_cast<std::uint64_t>(m.mul(src[j].second));
      if (v >= p) v -= p;
      if (v) out.emplace_back(dst[i].first, static_cast<std::uint32_t>(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

int rank_mod_p(const SparseMat& m, std::uint32_t p, std::vector<int>* pivot_rows,
               std::vector<int>* pivot_cols) {
  require(p >= 2 && p < (1u << 31), "prime out of range");
  // process rows sparsest-first (Markowitz-flavored) for fill control
  std::vector<int> order(m.nrows);
  for (int i = 0; i < m.nrows; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return m.rows[a].size() < m.rows[b].size();
  });

  std::vector<FpRow> pivots;       // lead coefficient normalized to 1
  std::map<int, int> pivot_by_col;  // col -> index into pivots
  if (pivot_rows) pivot_rows->clear();
  if (pivot_cols) pivot_cols->clear();

  for (int oi : order) {
    if (static_cast<int>(pivots.size()) == m.ncols) break;  // every column hit
    FpRow r = to_fp(m.rows[oi], p);
    while (!r.empty()) {
      int lead = r.front().first;
      auto it = pivot_by_col.find(lead);
      if (it == pivot_by_col.end()) {
        std::uint32_t inv = inv_mod_p(r.front().second, p);
        ShoupMul sm(inv, p);
        for (auto& [c, v] : r) v = sm.mul(v);
        pivot_by_col[lead] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(r));
        if (pivot_rows) pivot_rows->push_back(oi);
        if (pivot_cols) pivot_cols->push_back(lead);
        break;
      }
      fp_eliminate(r, pivots[it->second], r.front().second, p);
    }
  }
  return static_cast<int>(pivots.size());
}

// ---------------------------------------------------------------------------
// kernels

Lattice kernel_lattice(const SparseMat& m, std::uint64_t seed) {
  auto primes = select_primes(seed, 1);
  std::vector<int> rowset;
  int rk = rank_mod_p(m, primes[0], &rowset, nullptr);
  if (rk == m.ncols) {
    // full column rank mod p forces a trivial rational (hence integer) kernel
    Lattice empty;
    empty.ambient = m.ncols;
    return empty;
  }
  std::sort(rowset.begin(), rowset.end());

  for (int attempt = 0; attempt < 8; ++attempt) {
    SparseMat s = submatrix_rows(m, rowset);
    SparseMat t = s.transpose();  // m.ncols x |rowset|
    int k = s.nrows;
    std::vector<SRow> aug(t.nrows);
    for (int i = 0; i < t.nrows; ++i) {
      aug[i] = t.rows[i];
      aug[i].emplace_back(k + i, Int(1));
    }
    Lattice h = hnf(std::move(aug), k + m.ncols);
    Lattice ker;
    ker.ambient = m.ncols;
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
      if (h.pivots[i] < k) continue;
      SRow r;
      r.reserve(h.rows[i].size());
      for (const auto& [c, v] : h.rows[i]) r.emplace_back(c - k, v);
      ker.pivots.push_back(h.pivots[i] - k);
      ker.rows.push_back(std::move(r));
    }

    // exact verification against every constraint row
    std::vector<int> violated;
    std::vector<char> bad(m.nrows, 0);
    parallel_for(m.nrows, [&](std::size_t ri) {
      const SRow& row = m.rows[ri];
      if (row.empty()) return;
      for (const auto& kr : ker.rows) {
        // sparse-sparse dot
        Int acc(0);
        std::size_t i = 0, j = 0;
        while (i < row.size() && j < kr.size()) {
          if (row[i].first < kr[j].first)
            ++i;
          else if (kr[j].first < row[i].first)
            ++j;
          else {
            acc.addmul(row[i].second, kr[j].second);
            ++i;
            ++j;
          }
        }
        if (!acc.is_zero()) {
          bad[ri] = 1;
          return;
        }
      }
    });
    for (int ri = 0; ri < m.nrows; ++ri)
      if (bad[ri]) violated.push_back(ri);
    if (violated.empty()) return ker;
    // constraint subset missed part of the row space; widen and retry
    rowset.insert(rowset.end(), violated.begin(), violated.end());
    std::sort(rowset.begin(), rowset.end());
    rowset.erase(std::unique(rowset.begin(), rowset.end()), rowset.end());
  }
  fail("kernel_lattice: verification kept failing");
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

bool lattice_is_diagonal(const Lattice& l) {
  for (const auto& r : l.rows)
    if (r.size() != 1) return false;
  return true;
}

std::vector<Int> divisor_chain_fix(std::vector<Int> d) {
  for (auto& x : d)
    if (x.sign() < 0) x.negate();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        Int g = Int::gcd(d[i], d[j]);
        if (g == d[i] || (d[i] == d[j])) continue;
        Int l = Int::divexact(d[i] * d[j], g);
        if (d[i] == g && d[j] == l) continue;
        d[i] = g;
        d[j] = l;
        changed = true;
      }
    std::sort(d.begin(), d.end(), [](const Int& a, const Int& b) {
      return Int::cmp(a, b) < 0;
    });
  }
  return d;
}

}  // namespace

std::vector<Int> smith_normal_form(const SparseMat& m) {
  Lattice h = hnf(m);
  if (h.rows.empty()) return {};
  for (int pass = 0; pass < 200; ++pass) {
    if (lattice_is_diagonal(h)) {
      std::vector<Int> d;
      for (const auto& r : h.rows) d.push_back(r.front().second);
      return divisor_chain_fix(std::move(d));
    }
    h = hnf(h.to_matrix().transpose());
  }
  fail("smith_normal_form: alternation did not converge");
}

namespace {

std::vector<std::vector<Int>> dense_identity(int k) {
  std::vector<std::vector<Int>> r(k, std::vector<Int>(k, Int(0)));
  for (int i = 0; i < k; ++i) r[i][i] = Int(1);
  return r;
}

}  // namespace

SnfTransforms smith_normal_form_with_transforms(const SparseMat& m) {
  int nr = m.nrows, nc = m.ncols;
  auto a = m.to_dense();
  auto u = dense_identity(nr);
  auto v = dense_identity(nc);

  auto row_op = [&](int dst, int src, const Int& q) {  // row dst -= q*row src
    for (int j = 0; j < nc; ++j) a[dst][j].submul(q, a[src][j]);
    for (int j = 0; j < nr; ++j) u[dst][j].submul(q, u[src][j]);
  };
  auto col_op = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < nr; ++i) a[i][dst].submul(q, a[i][src]);
    for (int i = 0; i < nc; ++i) v[i][dst].submul(q, v[i][src]);
  };
  auto row_swap = [&](int x, int y) {
    std::swap(a[x], a[y]);
    std::swap(u[x], u[y]);
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < nr; ++i) std::swap(a[i][x], a[i][y]);
    for (int i = 0; i < nc; ++i) std::swap(v[i][x], v[i][y]);
  };

  int t = 0;
  while (t < std::min(nr, nc)) {
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j)
        if (!a[i][j].is_zero() &&
            (pi < 0 || Int::cmp_abs(a[i][j], a[pi][pj]) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    for (;;) {
      bool restart = false;
      for (int i = t + 1; i < nr && !restart; ++i) {
        if (a[i][t].is_zero()) continue;
        row_op(i, t, Int::ndiv_q(a[i][t], a[t][t]));
        if (!a[i][t].is_zero()) {
          row_swap(i, t);  // strictly smaller pivot
          restart = true;
        }
      }
      if (restart) continue;
      for (int j = t + 1; j < nc && !restart; ++j) {
        if (a[t][j].is_zero()) continue;
        col_op(j, t, Int::ndiv_q(a[t][j], a[t][t]));
        if (!a[t][j].is_zero()) {
          col_swap(j, t);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot must divide the remaining block for the divisor chain
      bool fixed = false;
      for (int i = t + 1; i < nr && !fixed; ++i)
        for (int j = t + 1; j < nc && !fixed; ++j)
          if (!Int::fdiv_r(a[i][j], a[t][t]).is_zero()) {
            row_op(t, i, Int(-1));  // pull the offending row in
            fixed = true;
          }
      if (!fixed) break;
    }
    if (a[t][t].sign() < 0) {
      for (int j = 0; j < nc; ++j) a[t][j].negate();
      for (int j = 0; j < nr; ++j) u[t][j].negate();
    }
    ++t;
  }

  SnfTransforms out;
  for (int i = 0; i < t; ++i) out.divisors.push_back(a[i][i]);
  out.u = std::move(u);
  out.v = std::move(v);

  // verify u*m*v against the diagonal
  auto um = std::vector<std::vector<Int>>(nr, std::vector<Int>(nc, Int(0)));
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < nr; ++k) {
      if (out.u[i][k].is_zero()) continue;
      for (const auto& [c, val] : m.rows[k]) um[i][c].addmul(out.u[i][k], val);
    }
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      Int acc(0);
      for (int k = 0; k < nc; ++k) acc.addmul(um[i][k], out.v[k][j]);
      Int expect = (i == j && i < t) ? out.divisors[i] : Int(0);
      require(acc == expect, "SNF transform verification failed");
    }
  return out;
}

bool is_saturated(const SparseMat& rows) {
  Lattice h = hnf(rows);
  bool units = true;
  for (const auto& r : h.rows) units &= r.front().second.is_one();
  if (units) return true;  // pivot minor is 1, so every divisor is 1
  auto d = smith_normal_form(h.to_matrix());
  for (const auto& x : d)
    if (!x.is_one()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Bareiss

Int bareiss_det(std::vector<std::vector<Int>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Int(1);
  require(static_cast<int>(a[0].size()) == n, "bareiss needs a square matrix");
  int sign = 1;
  Int prev(1);
  for (int k = 0; k < n - 1; ++k) {
    // pivot: smallest nonzero |entry| in column k at row >= k
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (piv < 0 || Int::cmp_abs(a[i][k], a[piv][k]) < 0) piv = i;
    }
    if (piv < 0) return Int(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    parallel_for(n - k - 1, [&](std::size_t t) {
      int i = k + 1 + static_cast<int>(t);
      for (int j = k + 1; j < n; ++j) {
        Int x = a[i][j] * a[k][k];
        x.submul(a[i][k], a[k][j]);
        a[i][j] = Int::divexact(x, prev);
      }
      a[i][k] = Int(0);
    });
    prev = a[k][k];
  }
  Int det = a[n - 1][n - 1];
  if (sign < 0) det.negate();
  return det;
}

// ---------------------------------------------------------------------------
// certified rank

RankCertificate rank_exact(const SparseMat& m, std::uint64_t seed,
                           int bareiss_max) {
  auto primes = select_primes(seed, 3);
  RankCertificate cert;
  int best = -1;
  std::vector<int> prows, pcols;
  for (auto p : primes) {
    std::vector<int> r, c;
    int rk = rank_mod_p(m, p, &r, &c);
    if (rk > best) {
      best = rk;
      prows = std::move(r);
      pcols = std::move(c);
    }
  }
  cert.rank = best;
  cert.minor_rows = prows;
  cert.minor_cols = pcols;

  // upper bound: exact kernel of co-rank size
  Lattice ker = kernel_lattice(m, seed);
  cert.kernel_rank = ker.rank();
  require(cert.kernel_rank == m.ncols - cert.rank,
          "rank certification failed: kernel rank does not match");

  // lower bound: a nonzero r x r minor
  if (cert.rank == 0) {
    cert.lower_method = "echelon";
    return cert;
  }
  // echelon shortcut: rows with pairwise distinct leading columns
  {
    std::vector<char> seen(m.ncols, 0);
    int distinct = 0;
    for (const auto& r : m.rows)
      if (!r.empty() && !seen[r.front().first]) {
        seen[r.front().first] = 1;
        ++distinct;
      }
    if (distinct >= cert.rank) {
      cert.lower_method = "echelon";
      return cert;
    }
  }
  // dense minor
  std::sort(cert.minor_rows.begin(), cert.minor_rows.end());
  std::sort(cert.minor_cols.begin(), cert.minor_cols.end());
  std::vector<int> colpos(m.ncols, -1);
  for (std::size_t i = 0; i < cert.minor_cols.size(); ++i)
    colpos[cert.minor_cols[i]] = static_cast<int>(i);
  auto build_minor = [&]() {
    std::vector<std::vector<Int>> sub(
        cert.rank, std::vector<Int>(cert.rank, Int(0)));
    for (int i = 0; i < cert.rank; ++i)
      for (const auto& [c, v] : m.rows[cert.minor_rows[i]])
        if (colpos[c] >= 0) sub[i][colpos[c]] = v;
    return sub;
  };
  if (cert.rank <= bareiss_max) {
    auto sub = build_minor();
    require(!bareiss_det(sub).is_zero(),
            "rank certification failed: Bareiss minor vanished");
    cert.lower_method = "bareiss";
    return cert;
  }
  // beyond the Bareiss budget: nonvanishing of the same minor at fresh primes
  auto extra = select_primes(seed ^ 0x9e3779b97f4a7c15ULL, 2);
  SparseMat sub_sparse = submatrix_rows(m, cert.minor_rows);
  SparseMat sub(cert.rank, cert.rank);
  for (int i = 0; i < cert.rank; ++i)
    for (const auto& [c, v] : sub_sparse.rows[i])
      if (colpos[c] >= 0) sub.rows[i].emplace_back(colpos[c], v);
  for (auto q : extra) {
    if (rank_mod_p(sub, q) == cert.rank) {
      cert.lower_method = "modular-minor";
      return cert;
    }
  }
  fail("rank certification failed: no nonzero minor exhibited");
}

// ---------------------------------------------------------------------------

Lattice iterated_kernel(const std::vector<SparseMat>& ops, const Lattice& start,
                        std::uint64_t seed, int batch) {
  require(batch >= 1, "batch must be positive");
  Lattice cur = start;
  std::size_t at = 0;
  while (at < ops.size() && !cur.is_zero()) {
    std::size_t hi = std::min(ops.size(), at + batch);
    SparseMat basis_t = cur.to_matrix().transpose();  // ambient x k
    std::vector<SRow> stacked;
    for (std::size_t oi = at; oi < hi; ++oi) {
      require(ops[oi].nrows == cur.ambient && ops[oi].ncols == cur.ambient,
              "operator shape mismatch");
      SparseMat prod = sparse_mul(ops[oi], basis_t);  // ambient x k
      for (auto& r : prod.rows) stacked.push_back(std::move(r));
    }
    SparseMat constraints =
        SparseMat::from_rows(cur.rank(), std::move(stacked));
    Lattice coeff = kernel_lattice(constraints, seed);
    // map coefficient rows back: new basis = coeff * cur
    SparseMat nb = sparse_mul(coeff.to_matrix(), cur.to_matrix());
    cur = hnf(nb);
    at = hi;
  }
  return cur;
}

SparseMat sparse_mul(const SparseMat& a, const SparseMat& b) {
  require(a.ncols == b.nrows, "product shape mismatch");
  SparseMat out(a.nrows, b.ncols);
  parallel_for(a.nrows, [&](std::size_t i) {
    std::vector<SEntry> acc;
    for (const auto& [j, v] : a.rows[i])
      for (const auto& [c, w] : b.rows[j]) acc.emplace_back(c, v * w);
    normalize_row(acc);
    out.rows[i] = std::move(acc);
  });
  return out;
}

SparseMat submatrix_rows(const SparseMat& m, const std::vector<int>& rows) {
  SparseMat out(static_cast<int>(rows.size()), m.ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) out.rows[i] = m.rows[rows[i]];
  return out;
}

}  // namespace octamod

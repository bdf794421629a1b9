#include "octamod/straighten.hpp"

#include <algorithm>

#include "octamod/util.hpp"

namespace octamod {

PlanarBasis::PlanarBasis(int n) : n_(n) {
  auto graphs = enumerate_noncrossing_regular(n, 1);
  planar_.assign(graphs.begin(), graphs.end());
  for (int i = 0; i < size(); ++i) {
    auto edges = planar_[i].edges;
    std::sort(edges.begin(), edges.end());
    planar_index_[edges] = i;
  }
}

int PlanarBasis::planar_index(const Matching& canonical) const {
  auto it = planar_index_.find(canonical.edges);
  require(it != planar_index_.end(), "matching is not planar");
  return it->second;
}

const std::vector<Int>& PlanarBasis::straighten_canonical(
    const Matching& canon) const {
  auto it = memo_.find(canon.edges);
  if (it != memo_.end()) return it->second;

  std::vector<Int> coords(size(), Int(0));
  // lowest crossing pair in sorted edge order
  int ci = -1, cj = -1;
  int ncross = 0;
  for (std::size_t i = 0; i < canon.edges.size() && ci < 0; ++i)
    for (std::size_t j = i + 1; j < canon.edges.size(); ++j)
      if (crossing(canon.edges[i], canon.edges[j])) {
        ci = static_cast<int>(i);
        cj = static_cast<int>(j);
        break;
      }
  if (ci < 0) {
    coords[planar_index_.at(canon.edges)] = Int(1);
  } else {
    ncross = count_crossings(canon);
    auto [a, b] = canon.edges[ci];
    auto [c, d] = canon.edges[cj];
    Matching g1 = canon, g2 = canon;
    g1.edges[ci] = {a, d};
    g1.edges[cj] = {c, b};
    g2.edges[ci] = {a, c};
    g2.edges[cj] = {b, d};
    for (Matching* g : {&g1, &g2}) {
      auto [cg, sg] = canonical_matching(*g);
      require(count_crossings(cg) < ncross,
              "Plucker move failed to reduce crossings");
      const auto& sub = straighten_canonical(cg);
      for (int k = 0; k < size(); ++k)
        if (!sub[k].is_zero()) coords[k] += (sg < 0 ? -sub[k] : sub[k]);
    }
  }
  return memo_.emplace(canon.edges, std::move(coords)).first->second;
}

std::vector<Int> PlanarBasis::straighten(const Matching& m) const {
  require(m.n == n_ && m.is_regular(1), "not a matching on this point set");
  auto [canon, sign] = canonical_matching(m);
  auto coords = straighten_canonical(canon);
  if (sign < 0)
    for (auto& c : coords) c.negate();
  return coords;
}

const std::vector<MultiPoly>& PlanarBasis::expansions() const {
  if (expansions_cache_.empty()) {
    for (const auto& b : planar_) expansions_cache_.push_back(expand_graph(b));
    // the basis expansions form an echelon system: leading monomials are
    // pairwise distinct with unit coefficients
    std::vector<std::uint32_t> leads;
    for (const auto& e : expansions_cache_) {
      require(e.leading_coeff().is_one(), "planar leading coefficient not 1");
      leads.push_back(e.leading_key());
    }
    auto sorted = leads;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "planar leading monomials collide");
  }
  return expansions_cache_;
}

std::vector<Int> PlanarBasis::straighten_by_solve(const Matching& m) const {
  expansions();
  auto [canon, sign] = canonical_matching(m);
  MultiPoly target = expand_graph(canon);
  std::vector<Int> coords(size(), Int(0));
  // reduce by leading keys; membership in the span makes each step exact
  auto terms = target.terms;
  while (!terms.empty()) {
    std::uint32_t lead = terms.back().first;
    int hit = -1;
    for (int i = 0; i < size(); ++i)
      if (expansions_cache_[i].leading_key() == lead) {
        hit = i;
        break;
      }
    require(hit >= 0, "expansion not in the planar span");
    Int c = terms.back().second;
    coords[hit] += c;
    std::vector<std::pair<std::uint32_t, Int>> merged;
    merged.reserve(terms.size() + expansions_cache_[hit].terms.size());
    for (auto& t : terms) merged.push_back(std::move(t));
    for (const auto& [k, v] : expansions_cache_[hit].terms)
      merged.emplace_back(k, -(c * v));
    normalize_terms(merged);
    terms = std::move(merged);
  }
  if (sign < 0)
    for (auto& c : coords) c.negate();
  return coords;
}

std::vector<std::vector<Int>> PlanarBasis::action_matrix(
    const Perm& sigma) const {
  std::vector<std::vector<Int>> a(size(), std::vector<Int>(size(), Int(0)));
  for (int i = 0; i < size(); ++i) {
    auto col = straighten(act(sigma, planar_[i]));
    for (int r = 0; r < size(); ++r) a[r][i] = col[r];
  }
  return a;
}

Int PlanarBasis::action_trace(const Perm& sigma) const {
  Int t(0);
  for (int i = 0; i < size(); ++i)
    t += straighten(act(sigma, planar_[i]))[i];
  return t;
}

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& a,
                                      const std::vector<std::vector<Int>>& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  std::vector<std::vector<Int>> r(n, std::vector<Int>(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j].addmul(a[i][t], b[t][j]);
    }
  return r;
}

std::vector<std::vector<Int>> mat_identity(int k) {
  std::vector<std::vector<Int>> r(k, std::vector<Int>(k, Int(0)));
  for (int i = 0; i < k; ++i) r[i][i] = Int(1);
  return r;
}

Int mat_trace(const std::vector<std::vector<Int>>& a) {
  Int t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

}  // namespace octamod

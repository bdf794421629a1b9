#include "octamod/multipoly.hpp"

#include <algorithm>

#include "octamod/util.hpp"

namespace octamod {

std::uint32_t MultiPoly::leading_key() const {
  require(!terms.empty(), "leading key of zero polynomial");
  return terms.back().first;
}

const Int& MultiPoly::leading_coeff() const {
  require(!terms.empty(), "leading coeff of zero polynomial");
  return terms.back().second;
}

std::vector<int> MultiPoly::unpack(std::uint32_t key) const {
  std::vector<int> a(n);
  for (int p = n - 1; p >= 0; --p) {
    a[p] = static_cast<int>(key % base);
    key /= base;
  }
  return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.n != b.n || a.degs != b.degs) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].first != b.terms[i].first ||
        a.terms[i].second != b.terms[i].second)
      return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto a = unpack(it->first);
    if (!s.empty()) s += " + ";
    s += it->second.to_string();
    for (int p = 0; p < n; ++p) {
      if (a[p]) s += " x" + std::to_string(p + 1) + "^" + std::to_string(a[p]);
      int ye = degs[p] - a[p];
      if (ye) s += " y" + std::to_string(p + 1) + "^" + std::to_string(ye);
    }
  }
  return s;
}

void normalize_terms(std::vector<std::pair<std::uint32_t, Int>>& t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::uint32_t k = t[i].first;
    Int acc = std::move(t[i].second);
    std::size_t j = i + 1;
    while (j < t.size() && t[j].first == k) acc += t[j++].second;
    if (!acc.is_zero()) {
      t[out].first = k;
      t[out].second = std::move(acc);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

namespace {
std::uint32_t check_key_space(int n, std::uint32_t base) {
  // base^n must fit comfortably in 32 bits
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= base;
    require(total <= (1ull << 31), "monomial key space exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(total);
}
}  // namespace

MultiPoly bracket(int i, int j, int n) {
  require(i >= 1 && i <= n && j >= 1 && j <= n, "bracket index out of range");
  MultiPoly p;
  p.n = n;
  p.degs.assign(n, 0);
  p.degs[i - 1] += 1;
  p.degs[j - 1] += 1;
  p.base = 1;
  for (int d : p.degs) p.base = std::max<std::uint32_t>(p.base, d + 1);
  check_key_space(n, p.base);
  if (i == j) return p;  // loop relation
  auto key_for = [&](int xp) {
    std::uint32_t k = 0;
    for (int q = 1; q <= n; ++q) k = k * p.base + (q == xp ? 1 : 0);
    return k;
  };
  p.terms.emplace_back(key_for(i), Int(1));    // x_i y_j
  p.terms.emplace_back(key_for(j), Int(-1));   // -x_j y_i
  normalize_terms(p.terms);
  return p;
}

std::vector<std::pair<std::uint32_t, Int>> repack_terms(const MultiPoly& p,
                                                        std::uint32_t to_base) {
  require(to_base >= p.base, "repack must not shrink the base");
  std::vector<std::pair<std::uint32_t, Int>> out;
  out.reserve(p.terms.size());
  for (const auto& [key, c] : p.terms) {
    auto digits = p.unpack(key);
    std::uint32_t k = 0;
    for (int q = 0; q < p.n; ++q) k = k * to_base + digits[q];
    out.emplace_back(k, c);
  }
  return out;
}

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q) {
  require(p.n == q.n, "point sets differ");
  MultiPoly r;
  r.n = p.n;
  r.degs.resize(p.n);
  std::uint32_t base = 1;
  for (int i = 0; i < p.n; ++i) {
    r.degs[i] = p.degs[i] + q.degs[i];
    base = std::max<std::uint32_t>(base, r.degs[i] + 1);
  }
  r.base = base;
  check_key_space(r.n, base);
  auto pt = repack_terms(p, base);
  auto qt = repack_terms(q, base);
  r.terms.reserve(pt.size() * qt.size());
  for (const auto& [ka, ca] : pt)
    for (const auto& [kb, cb] : qt) r.terms.emplace_back(ka + kb, ca * cb);
  normalize_terms(r.terms);
  return r;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) {
  require(p.n == q.n && p.degs == q.degs, "inhomogeneous sum");
  MultiPoly r;
  r.n = p.n;
  r.degs = p.degs;
  r.base = p.base;
  r.terms = p.terms;
  r.terms.insert(r.terms.end(), q.terms.begin(), q.terms.end());
  normalize_terms(r.terms);
  return r;
}

MultiPoly scale(const MultiPoly& p, const Int& c) {
  MultiPoly r;
  r.n = p.n;
  r.degs = p.degs;
  r.base = p.base;
  if (c.is_zero()) return r;
  r.terms = p.terms;
  for (auto& [k, v] : r.terms) v *= c;
  return r;
}

MultiPoly expand_graph(const DirectedGraph& g) {
  require(!g.edges.empty(), "expand of edgeless graph");
  MultiPoly acc = bracket(g.edges[0].first, g.edges[0].second, g.n);
  for (std::size_t i = 1; i < g.edges.size(); ++i)
    acc = multiply(acc, bracket(g.edges[i].first, g.edges[i].second, g.n));
  return acc;
}

MultiPoly act_on_points(const Perm& sigma, const MultiPoly& p) {
  MultiPoly r;
  r.n = p.n;
  r.degs.resize(p.n);
  for (int q = 1; q <= p.n; ++q) r.degs[sigma.apply(q) - 1] = p.degs[q - 1];
  r.base = p.base;
  r.terms.reserve(p.terms.size());
  for (const auto& [key, c] : p.terms) {
    auto digits = p.unpack(key);
    std::vector<int> nd(p.n);
    for (int q = 1; q <= p.n; ++q) nd[sigma.apply(q) - 1] = digits[q - 1];
    std::uint32_t k = 0;
    for (int q = 0; q < p.n; ++q) k = k * r.base + nd[q];
    r.terms.emplace_back(k, c);
  }
  normalize_terms(r.terms);
  return r;
}

bool plucker_identity_check(const DirectedGraph& g, std::size_t e1,
                            std::size_t e2) {
  require(e1 < g.edges.size() && e2 < g.edges.size() && e1 != e2,
          "bad edge indices");
  auto [a, b] = g.edges[e1];
  auto [c, d] = g.edges[e2];
  DirectedGraph g1 = g, g2 = g;
  g1.edges[e1] = {a, d};
  g1.edges[e2] = {c, b};
  g2.edges[e1] = {a, c};
  g2.edges[e2] = {b, d};
  return expand_graph(g) == add(expand_graph(g1), expand_graph(g2));
}

}  // namespace octamod

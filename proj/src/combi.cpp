#include "octamod/combi.hpp"

#include <algorithm>
#include <numeric>

#include "octamod/util.hpp"

namespace octamod {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

int Perm::sign() const {
  std::vector<bool> seen(img.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j] - 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

Perm Perm::compose(const Perm& rhs) const {
  Perm r;
  r.img.resize(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = img[rhs.img[i] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(img.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j] - 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<ConjClass> conjugacy_classes(int n) {
  std::vector<ConjClass> out;
  for (const auto& mu : partitions_of(n)) {
    std::int64_t z = 1;
    int run = 1;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      z *= mu[i];
      if (i + 1 < mu.size() && mu[i + 1] == mu[i]) {
        ++run;
      } else {
        for (int k = 2; k <= run; ++k) z *= k;
        run = 1;
      }
    }
    out.push_back({mu, factorial(n) / z});
  }
  return out;
}

Perm class_representative(const Partition& type, int n) {
  Perm p = Perm::identity(n);
  int at = 1;
  for (int part : type) {
    for (int i = 0; i < part; ++i)
      p.img[at - 1 + i] = (i + 1 < part) ? at + i + 1 : at;
    at += part;
  }
  require(at == n + 1, "partition does not sum to n");
  return p;
}

Partition power_cycle_type(const Partition& type, int k) {
  Partition out;
  for (int i : type) {
    int g = std::gcd(i, k);
    for (int t = 0; t < g; ++t) out.push_back(i / g);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

DirectedGraph::DirectedGraph(int n_, std::vector<std::pair<int, int>> e)
    : n(n_), edges(std::move(e)) {
  for (auto& [a, b] : edges)
    require(a >= 1 && a <= n && b >= 1 && b <= n, "edge endpoint out of range");
}

bool DirectedGraph::has_loop() const {
  for (auto& [a, b] : edges)
    if (a == b) return true;
  return false;
}

bool DirectedGraph::is_regular(int d) const {
  std::vector<int> deg(n, 0);
  for (auto& [a, b] : edges) {
    ++deg[a - 1];
    ++deg[b - 1];
  }
  for (int v = 0; v < n; ++v)
    if (deg[v] != d) return false;
  return true;
}

int DirectedGraph::degree() const {
  int d = n ? static_cast<int>(2 * edges.size()) / n : 0;
  require(is_regular(d), "graph is not regular");
  return d;
}

std::string DirectedGraph::to_json() const {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::string s = "[";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(sorted[i].first) + "," +
         std::to_string(sorted[i].second) + "]";
  }
  return s + "]";
}

bool crossing(std::pair<int, int> e1, std::pair<int, int> e2) {
  int a = std::min(e1.first, e1.second), b = std::max(e1.first, e1.second);
  int c = std::min(e2.first, e2.second), d = std::max(e2.first, e2.second);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

int count_crossings(const DirectedGraph& g) {
  int cnt = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j)
      cnt += crossing(g.edges[i], g.edges[j]) ? 1 : 0;
  return cnt;
}

std::vector<Matching> enumerate_matchings(int n) {
  require(n >= 2 && n % 2 == 0, "matchings need even n >= 2");
  require(n <= 12, "matchings supported for n <= 12");
  std::vector<Matching> out;
  std::vector<bool> used(n + 1, false);
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    for (int i = 1; i <= n; ++i)
      if (!used[i]) {
        v = i;
        break;
      }
    if (v == 0) {
      out.emplace_back(n, cur);
      return;
    }
    used[v] = true;
    for (int w = v + 1; w <= n; ++w) {
      if (used[w]) continue;
      used[w] = true;
      cur.emplace_back(v, w);
      self(self);
      cur.pop_back();
      used[w] = false;
    }
    used[v] = false;
  };
  rec(rec);
  return out;
}

std::vector<DirectedGraph> enumerate_noncrossing_regular(int n, int d) {
  require(n >= 2 && n % 2 == 0, "even n required");
  require(n * d <= 40, "n*d too large to enumerate");
  std::vector<DirectedGraph> out;
  std::vector<int> rem(n + 1, d);
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int min_partner) -> void {
    int v = 0;
    for (int i = 1; i <= n; ++i)
      if (rem[i] > 0) {
        v = i;
        break;
      }
    if (v == 0) {
      out.emplace_back(n, cur);
      return;
    }
    // v is the lowest open vertex, so its partners are all larger; repeated
    // picks of the same partner give multi-edges in sorted multiset order
    int lo = (!cur.empty() && cur.back().first == v) ? cur.back().second : v + 1;
    (void)min_partner;
    for (int w = std::max(v + 1, lo); w <= n; ++w) {
      if (rem[w] == 0) continue;
      bool ok = true;
      for (auto& e : cur)
        if (crossing(e, {v, w})) {
          ok = false;
          break;
        }
      if (!ok) continue;
      --rem[v];
      --rem[w];
      cur.emplace_back(v, w);
      self(self, w);
      cur.pop_back();
      ++rem[v];
      ++rem[w];
    }
  };
  rec(rec, 0);
  return out;
}

DirectedGraph act(const Perm& sigma, const DirectedGraph& g) {
  DirectedGraph r;
  r.n = g.n;
  r.edges.reserve(g.edges.size());
  for (auto& [a, b] : g.edges) r.edges.emplace_back(sigma.apply(a), sigma.apply(b));
  return r;
}

int matching_sign(const Matching& m) {
  auto edges = m.edges;
  std::sort(edges.begin(), edges.end());
  std::vector<int> word;
  word.reserve(2 * edges.size());
  for (auto& [a, b] : edges) {
    word.push_back(a);
    word.push_back(b);
  }
  Perm p;
  p.img = word;
  require(static_cast<int>(word.size()) == m.n, "not a perfect matching");
  return p.sign();
}

std::pair<Matching, int> canonical_matching(const Matching& m) {
  Matching c = m;
  int sign = 1;
  for (auto& [a, b] : c.edges) {
    require(a != b, "matching has a loop");
    if (a > b) {
      std::swap(a, b);
      sign = -sign;
    }
  }
  std::sort(c.edges.begin(), c.edges.end());
  return {c, sign};
}

DirectedGraph graph_union(const DirectedGraph& a, const DirectedGraph& b) {
  require(a.n == b.n, "vertex sets differ");
  DirectedGraph r = a;
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  return r;
}

}  // namespace octamod

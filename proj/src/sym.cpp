#include "octamod/sym.hpp"

#include <algorithm>

#include "octamod/combi.hpp"
#include "octamod/util.hpp"

namespace octamod {

SymBasis::SymBasis(int nvars_, int deg_) : nvars(nvars_), deg(deg_) {
  std::vector<std::uint8_t> cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == nvars - 1) {
      cur[var] = static_cast<std::uint8_t>(rest);
      expo.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, rest - e);
    }
  };
  if (nvars > 0) rec(rec, 0, deg);
  for (int i = 0; i < size(); ++i) index[expo[i]] = i;
  require(size() == binomial(nvars + deg - 1, deg), "basis size mismatch");
}

int SymBasis::index_of(const std::vector<std::uint8_t>& e) const {
  auto it = index.find(e);
  require(it != index.end(), "monomial not in basis");
  return it->second;
}

namespace {
std::int64_t multinomial(int d, const std::vector<std::uint8_t>& e) {
  std::int64_t num = factorial(d);
  for (auto x : e)
    if (x > 1) num /= factorial(x);
  return num;
}
}  // namespace

SymVector power_of_linear(const std::vector<Int>& v, const SymBasis& target) {
  require(static_cast<int>(v.size()) == target.nvars, "dimension mismatch");
  SymVector out(target.size(), Int(0));
  std::vector<int> support;
  for (int i = 0; i < target.nvars; ++i)
    if (!v[i].is_zero()) support.push_back(i);
  if (support.empty()) return out;
  int d = target.deg;
  // multisets of size d over the support
  std::vector<int> pick(d, 0);
  std::vector<std::uint8_t> e(target.nvars, 0);
  auto rec = [&](auto&& self, int slot, int minidx) -> void {
    if (slot == d) {
      std::fill(e.begin(), e.end(), 0);
      Int c(1);
      for (int s = 0; s < d; ++s) {
        ++e[support[pick[s]]];
        c *= v[support[pick[s]]];
      }
      c *= Int(multinomial(d, e));
      out[target.index_of(e)] += c;
      return;
    }
    for (int i = minidx; i < static_cast<int>(support.size()); ++i) {
      pick[slot] = i;
      self(self, slot + 1, i);
    }
  };
  rec(rec, 0, 0);
  return out;
}

SymVector partial_derivative(const SymVector& f, const SymBasis& from,
                             const SymBasis& to, int var) {
  require(to.deg == from.deg - 1, "derivative degree mismatch");
  SymVector out(to.size(), Int(0));
  for (int i = 0; i < from.size(); ++i) {
    if (f[i].is_zero()) continue;
    const auto& e = from.expo[i];
    if (e[var] == 0) continue;
    auto e2 = e;
    --e2[var];
    out[to.index_of(e2)] += f[i] * Int(static_cast<int>(e[var]));
  }
  return out;
}

SymVector mult_by_var(const SymVector& f, const SymBasis& from,
                      const SymBasis& to, int var) {
  require(to.deg == from.deg + 1, "product degree mismatch");
  SymVector out(to.size(), Int(0));
  for (int i = 0; i < from.size(); ++i) {
    if (f[i].is_zero()) continue;
    auto e2 = from.expo[i];
    ++e2[var];
    out[to.index_of(e2)] = f[i];
  }
  return out;
}

SymVector apply_substitution(const std::vector<std::vector<Int>>& a,
                             const SymVector& f, const SymBasis& basis) {
  int k = basis.nvars;
  SymVector out(basis.size(), Int(0));
  int d = basis.deg;
  std::vector<int> vars;
  for (int i = 0; i < basis.size(); ++i) {
    if (f[i].is_zero()) continue;
    vars.clear();
    const auto& e = basis.expo[i];
    for (int v = 0; v < k; ++v)
      for (int t = 0; t < e[v]; ++t) vars.push_back(v);
    // expand prod_t (sum_b a[b][vars[t]] x_b)
    std::vector<std::pair<std::vector<std::uint8_t>, Int>> acc;
    acc.emplace_back(std::vector<std::uint8_t>(k, 0), f[i]);
    for (int t = 0; t < d; ++t) {
      std::vector<std::pair<std::vector<std::uint8_t>, Int>> next;
      for (auto& [mon, c] : acc) {
        for (int b = 0; b < k; ++b) {
          if (a[b][vars[t]].is_zero()) continue;
          auto m2 = mon;
          ++m2[b];
          next.emplace_back(std::move(m2), c * a[b][vars[t]]);
        }
      }
      acc = std::move(next);
    }
    for (auto& [mon, c] : acc) out[basis.index_of(mon)] += c;
  }
  return out;
}

bool is_zero(const SymVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

SymVector add(SymVector a, const SymVector& b) {
  require(a.size() == b.size(), "vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

SymVector sub(SymVector a, const SymVector& b) {
  require(a.size() == b.size(), "vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

SymVector scale(SymVector a, const Int& c) {
  for (auto& x : a) x *= c;
  return a;
}

Int content(const SymVector& v) {
  Int g(0);
  for (const auto& x : v) {
    g = Int::gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

Rat normalize_primitive(SymVector& v) {
  Int g = content(v);
  if (g.is_zero()) return Rat(Int(0));
  int lead_sign = 0;
  for (const auto& x : v)
    if (!x.is_zero()) {
      lead_sign = x.sign();
      break;
    }
  Int f = lead_sign < 0 ? -g : g;
  for (auto& x : v) x = Int::divexact(x, f);
  return Rat(f);
}

}  // namespace octamod

#include "octamod/reptheory.hpp"

#include <algorithm>
#include <mutex>

#include "octamod/util.hpp"

namespace octamod {

const Int& CharacterVector::at(const std::vector<ConjClass>& classes,
                               const Partition& type) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].type == type) return values[i];
  fail("unknown conjugacy class");
}

namespace {

int partition_sum(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

std::map<std::pair<Partition, Partition>, Int>& mn_memo() {
  static std::map<std::pair<Partition, Partition>, Int> memo;
  return memo;
}
std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

// Border strips of length k are k-steps on beta numbers b_i = lambda_i+(m-1-i):
// removable iff b_i - k >= 0 and not already a beta number; the strip height
// is the number of beta numbers jumped over.
Int mn_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return Int(1);  // lambda is empty too (sizes match)
  {
    std::lock_guard<std::mutex> lock(mn_mutex());
    auto it = mn_memo().find({lambda, mu});
    if (it != mn_memo().end()) return it->second;
  }
  int k = mu[0];
  Partition mu_rest(mu.begin() + 1, mu.end());
  int m = static_cast<int>(lambda.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
  Int total(0);
  for (int i = 0; i < m; ++i) {
    int t = beta[i] - k;
    if (t < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (beta[j] == t) occupied = true;
      if (beta[j] < beta[i] && beta[j] > t) ++height;
    }
    if (occupied) continue;
    auto nb = beta;
    nb[i] = t;
    std::sort(nb.rbegin(), nb.rend());
    Partition nl;
    for (int j = 0; j < m; ++j) {
      int part = nb[j] - (m - 1 - j);
      require(part >= 0, "bad beta conversion");
      if (part > 0) nl.push_back(part);
    }
    Int term = mn_rec(nl, mu_rest);
    if (height % 2 == 1) term.negate();
    total += term;
  }
  {
    std::lock_guard<std::mutex> lock(mn_mutex());
    mn_memo().emplace(std::make_pair(lambda, mu), total);
  }
  return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
  require(partition_sum(lambda) == partition_sum(mu),
          "partitions of different sizes");
  return mn_rec(lambda, mu);
}

Int hook_dimension(const Partition& lambda) {
  int n = partition_sum(lambda);
  std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) ++conj[j];
  Int num(factorial(n));
  Int den(1);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int hook = (lambda[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
      den *= Int(hook);
    }
  return Int::divexact(num, den);
}

CharacterVector character_of(const Partition& lambda, int n) {
  require(partition_sum(lambda) == n, "partition size mismatch");
  auto classes = conjugacy_classes(n);
  CharacterVector cv;
  cv.n = n;
  cv.values.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    cv.values[i] = mn_character(lambda, classes[i].type);
  return cv;
}

PowerTraces power_traces(const CharacterVector& chi) {
  auto classes = conjugacy_classes(chi.n);
  PowerTraces out;
  out.sym2.n = out.alt2.n = out.sym3.n = chi.n;
  out.sym2.values.resize(classes.size());
  out.alt2.values.resize(classes.size());
  out.sym3.values.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& mu = classes[i].type;
    Int t1 = chi.at(classes, mu);
    Int t2 = chi.at(classes, power_cycle_type(mu, 2));
    Int t3 = chi.at(classes, power_cycle_type(mu, 3));
    out.sym2.values[i] = Int::divexact(t1 * t1 + t2, Int(2));
    out.alt2.values[i] = Int::divexact(t1 * t1 - t2, Int(2));
    out.sym3.values[i] =
        Int::divexact(t1 * t1 * t1 + Int(3) * t1 * t2 + Int(2) * t3, Int(6));
  }
  return out;
}

Int multiplicity(const Partition& lambda, const CharacterVector& chi_m) {
  auto classes = conjugacy_classes(chi_m.n);
  Int acc(0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Int term = mn_character(lambda, classes[i].type) * chi_m.values[i];
    acc.addmul(Int(classes[i].size), term);
  }
  Int mult = Int::divexact(acc, Int(factorial(chi_m.n)));
  require(mult.sign() >= 0, "negative multiplicity");
  return mult;
}

std::vector<std::pair<Partition, Int>> decompose(const CharacterVector& chi) {
  std::vector<std::pair<Partition, Int>> out;
  for (const auto& lambda : partitions_of(chi.n)) {
    Int m = multiplicity(lambda, chi);
    if (!m.is_zero()) out.emplace_back(lambda, m);
  }
  return out;
}

CharacterVector char_add(const CharacterVector& a, const CharacterVector& b) {
  require(a.n == b.n && a.values.size() == b.values.size(), "size mismatch");
  CharacterVector r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

CharacterVector char_sub(const CharacterVector& a, const CharacterVector& b) {
  require(a.n == b.n && a.values.size() == b.values.size(), "size mismatch");
  CharacterVector r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
  return r;
}

}  // namespace octamod

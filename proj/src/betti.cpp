#include "octamod/betti.hpp"

#include <sstream>

#include "octamod/graded.hpp"
#include "octamod/util.hpp"

namespace octamod {

std::vector<Int> hilbert_series_numerator() {
  const int top = 10;
  // (1-t)^6 coefficients
  std::vector<Int> pow(7);
  for (int i = 0; i <= 6; ++i) {
    pow[i] = Int(binomial(6, i));
    if (i % 2) pow[i].negate();
  }
  std::vector<Int> num(top + 1, Int(0));
  for (int k = 0; k <= top; ++k)
    for (int i = 0; i <= 6 && i + k <= top; ++i)
      num[k + i].addmul(pow[i], Int(howe_hilbert(k)));
  // stationary beyond degree 4
  for (int k = 5; k <= top; ++k)
    require(num[k].is_zero(), "Hilbert numerator did not terminate");
  num.resize(5);
  return num;
}

Int BettiTable::get(int i, int j) const {
  auto it = b.find({i, j});
  return it == b.end() ? Int(0) : it->second;
}

void BettiTable::set(int i, int j, Int v) {
  if (v.is_zero())
    b.erase({i, j});
  else
    b[{i, j}] = std::move(v);
}

std::string BettiTable::render() const {
  std::ostringstream os;
  os << "    ";
  for (int i = 0; i <= 8; ++i) os << "\t" << i;
  os << "\n";
  for (int j = 0; j <= 4; ++j) {
    os << "  " << j << ":";
    for (int i = 0; i <= 8; ++i) os << "\t" << get(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

BettiTable betti_diagram(int quadrics, int linear_syzygies) {
  require(linear_syzygies == 0 || linear_syzygies == 1,
          "unsupported syzygy count");
  const int r = 8, dim = 6, a = -2;  // codimension, Krull dimension, a-invariant
  auto sym = [&](int i, int j) { return std::pair<int, int>{r - i, dim + a - j}; };

  BettiTable t;
  t.set(0, 0, Int(1));
  t.set(1, 1, Int(quadrics));
  t.set(2, 1, Int(linear_syzygies));
  t.set(1, 2, Int(linear_syzygies));  // dual pairing gives b_(1,2) = b_(2,1)
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {0, 0}, {1, 1}, {2, 1}, {1, 2}}) {
    auto [si, sj] = sym(i, j);
    t.set(si, sj, t.get(i, j));
  }

  // middle row from the Euler characteristic of the resolution:
  // f(k) = sum (-1)^i b_{i,j} g(k-i-j), g(k) = C(k+13,13)
  auto g = [](int k) { return k < 0 ? Int(0) : Int(binomial(k + 13, 13)); };
  auto euler_known = [&](int k) {
    Int acc(0);
    for (const auto& [ij, v] : t.b) {
      auto [i, j] = ij;
      Int term = v * g(k - i - j);
      if (i % 2) term.negate();
      acc += term;
    }
    return acc;
  };
  // solve for b_(i,2), i = 2..6; the unknown first enters at k = i + 2 with
  // coefficient (-1)^i, every not-yet-solved entry enters with g(<0) = 0
  for (int i = 2; i <= 6; ++i) {
    int k = i + 2;
    Int rhs = Int(howe_hilbert(k)) - euler_known(k);
    if (i % 2) rhs.negate();
    require(rhs.sign() >= 0, "negative Betti number");
    t.set(i, 2, rhs);
  }
  // consistency across k = 2..10 and the row-2 symmetry
  for (int k = 2; k <= 10; ++k) {
    Int acc(0);
    for (const auto& [ij, v] : t.b) {
      auto [i, j] = ij;
      Int term = v * g(k - i - j);
      if (i % 2) term.negate();
      acc += term;
    }
    require(acc == Int(howe_hilbert(k)), "Euler identity failed at k=" +
                                             std::to_string(k));
  }
  for (int i = 0; i <= 8; ++i)
    require(t.get(i, 2) == t.get(8 - i, 2), "middle row not symmetric");
  return t;
}

Int weyl_dimension_A(int rank, const std::vector<int>& fundamental_coeffs) {
  require(static_cast<int>(fundamental_coeffs.size()) == rank,
          "need one coefficient per fundamental weight");
  // lambda as a partition-like vector: lambda_i = sum_{k>=i} c_k
  std::vector<long long> lam(rank + 1, 0);
  for (int i = rank - 1; i >= 0; --i)
    lam[i] = lam[i + 1] + fundamental_coeffs[i];
  Int num(1), den(1);
  for (int i = 0; i < rank + 1; ++i)
    for (int j = i + 1; j < rank + 1; ++j) {
      num *= Int(lam[i] - lam[j] + (j - i));
      den *= Int(j - i);
    }
  return Int::divexact(num, den);
}

}  // namespace octamod

#include <doctest.h>

#include <algorithm>
#include <set>

#include "octamod/combi.hpp"
#include "octamod/util.hpp"

using namespace octamod;

namespace {
Perm random_perm(int n, SplitMix64& rng) {
  Perm p = Perm::identity(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(p.img[i], p.img[rng.below(i + 1)]);
  return p;
}
}  // namespace

TEST_SUITE("combi") {

TEST_CASE("matching enumeration counts and canonical form") {
  CHECK(enumerate_matchings(2).size() == 1);
  CHECK(enumerate_matchings(4).size() == 3);
  CHECK(enumerate_matchings(8).size() == 105);   // 7!!
  CHECK(enumerate_matchings(10).size() == 945);  // 9!!
  CHECK_THROWS(enumerate_matchings(5));

  auto m4 = enumerate_matchings(4);
  std::set<std::vector<std::pair<int, int>>> seen;
  for (const auto& m : m4) {
    CHECK(m.is_regular(1));
    for (auto& [a, b] : m.edges) CHECK(a < b);
    seen.insert(m.edges);
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("crossing predicate") {
  CHECK(crossing({1, 3}, {2, 4}));
  CHECK(!crossing({1, 2}, {3, 4}));
  CHECK(!crossing({1, 3}, {3, 5}));
  // symmetric and irreflexive
  SplitMix64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::pair<int, int> e1{1 + int(rng.below(8)), 1 + int(rng.below(8))};
    std::pair<int, int> e2{1 + int(rng.below(8)), 1 + int(rng.below(8))};
    CHECK(crossing(e1, e2) == crossing(e2, e1));
    CHECK(!crossing(e1, e1));
  }
}

TEST_CASE("non-crossing enumeration hits the Kempe counts") {
  CHECK(enumerate_noncrossing_regular(4, 1).size() == 2);
  CHECK(enumerate_noncrossing_regular(8, 1).size() == 14);
  CHECK(enumerate_noncrossing_regular(8, 2).size() == 91);
  CHECK(enumerate_noncrossing_regular(10, 1).size() == 42);

  // degree-1 case agrees with filtering the matchings
  auto all = enumerate_matchings(8);
  std::vector<Matching> planar;
  for (const auto& m : all)
    if (count_crossings(m) == 0) planar.push_back(m);
  auto nc = enumerate_noncrossing_regular(8, 1);
  REQUIRE(planar.size() == nc.size());
  for (std::size_t i = 0; i < nc.size(); ++i) {
    auto a = planar[i].edges, b = nc[i].edges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("matching sign pins and equivariance") {
  Matching id8(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(matching_sign(id8) == 1);
  Matching flip(8, {{2, 1}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(matching_sign(flip) == -1);

  SplitMix64 rng(11);
  auto all = enumerate_matchings(8);
  for (int t = 0; t < 50; ++t) {
    Perm s = random_perm(8, rng);
    const auto& m = all[rng.below(all.size())];
    CHECK(matching_sign(act(s, m)) == s.sign() * matching_sign(m));
  }
}

TEST_CASE("group action laws") {
  SplitMix64 rng(3);
  auto all = enumerate_matchings(8);
  for (int t = 0; t < 30; ++t) {
    Perm s = random_perm(8, rng), u = random_perm(8, rng);
    const auto& g = all[rng.below(all.size())];
    CHECK(act(Perm::identity(8), g) == g);
    CHECK(act(s.compose(u), g) == act(s, act(u, g)));
  }
  Matching m(8, {{1, 3}, {2, 4}, {5, 6}, {7, 8}});
  Perm swap12 = Perm::identity(8);
  std::swap(swap12.img[0], swap12.img[1]);
  auto r = act(swap12, m);
  CHECK(r.edges[0] == std::pair<int, int>{2, 3});
  CHECK(r.edges[1] == std::pair<int, int>{1, 4});
}

TEST_CASE("conjugacy classes") {
  auto c3 = conjugacy_classes(3);
  REQUIRE(c3.size() == 3);
  std::int64_t total = 0;
  for (auto& c : c3) total += c.size;
  CHECK(total == 6);
  // brute force S3 class sizes by cycle type
  for (auto& c : c3) {
    if (c.type == Partition{1, 1, 1}) CHECK(c.size == 1);
    if (c.type == Partition{2, 1}) CHECK(c.size == 3);
    if (c.type == Partition{3}) CHECK(c.size == 2);
  }

  auto c8 = conjugacy_classes(8);
  CHECK(c8.size() == 22);
  total = 0;
  for (auto& c : c8) total += c.size;
  CHECK(total == 40320);
  for (auto& c : c8) {
    if (c.type == Partition(8, 1)) CHECK(c.size == 1);  // identity class
    Perm rep = class_representative(c.type, 8);
    CHECK(rep.cycle_type() == c.type);
  }
}

TEST_CASE("power map on cycle types") {
  CHECK(power_cycle_type({8}, 2) == Partition{4, 4});
  CHECK(power_cycle_type({6, 2}, 3) == Partition{2, 2, 2, 2});
  CHECK(power_cycle_type({5, 3}, 1) == Partition{5, 3});
}

TEST_CASE("graph json") {
  Matching m(4, {{3, 4}, {1, 2}});
  CHECK(m.to_json() == "[[1,2],[3,4]]");
}

}  // TEST_SUITE

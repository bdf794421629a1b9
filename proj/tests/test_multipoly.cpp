#include <doctest.h>

#include "octamod/multipoly.hpp"
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

TEST_SUITE("multipoly") {

TEST_CASE("bracket basics") {
  auto b = bracket(1, 2, 4);
  CHECK(b.term_count() == 2);
  auto rev = bracket(2, 1, 4);
  CHECK(scale(rev, Int(-1)) == b);
  CHECK(bracket(1, 1, 4).is_zero());
}

TEST_CASE("expand small matching") {
  // {(1,2),(3,4)} -> x1y2x3y4 - x1y2x4y3 - x2y1x3y4 + x2y1x4y3
  Matching m(4, {{1, 2}, {3, 4}});
  auto p = expand_graph(m);
  CHECK(p.term_count() == 4);
  int plus = 0, minus = 0;
  for (auto& [k, c] : p.terms) {
    CHECK(c.is_unit());
    (c.sign() > 0 ? plus : minus)++;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
  CHECK(p.degs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("matchings on 8 points expand to 16 unit terms") {
  auto all = enumerate_matchings(8);
  SplitMix64 rng(5);
  for (int t = 0; t < 12; ++t) {
    const auto& m = all[rng.below(all.size())];
    auto p = expand_graph(m);
    CHECK(p.term_count() == 16);
    for (auto& [k, c] : p.terms) CHECK(c.is_unit());
  }
}

TEST_CASE("loop kills the product") {
  DirectedGraph g(4, {{1, 1}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(expand_graph(g).is_zero());
}

TEST_CASE("multiplication matches graph union") {
  SplitMix64 rng(17);
  auto all = enumerate_matchings(8);
  for (int t = 0; t < 8; ++t) {
    const auto& a = all[rng.below(all.size())];
    const auto& b = all[rng.below(all.size())];
    CHECK(multiply(expand_graph(a), expand_graph(b)) ==
          expand_graph(graph_union(a, b)));
  }
  // square of a single bracket: 3 terms with middle coefficient -2
  auto sq = multiply(bracket(1, 2, 2), bracket(1, 2, 2));
  REQUIRE(sq.term_count() == 3);
  bool saw_minus2 = false;
  for (auto& [k, c] : sq.terms) saw_minus2 |= (c == Int(-2));
  CHECK(saw_minus2);
}

TEST_CASE("multiply by zero") {
  auto p = expand_graph(Matching(4, {{1, 2}, {3, 4}}));
  auto z = scale(p, Int(0));
  CHECK(z.is_zero());
  CHECK(multiply(p, bracket(1, 1, 4)).is_zero());
}

TEST_CASE("Plucker identity") {
  // 4-point crossing matching rewrites into the two planar ones
  Matching cross(4, {{1, 3}, {2, 4}});
  auto lhs = expand_graph(cross);
  auto rhs = add(expand_graph(Matching(4, {{1, 4}, {2, 3}})),
                 expand_graph(Matching(4, {{1, 2}, {3, 4}})));
  CHECK(lhs == rhs);

  SplitMix64 rng(23);
  auto all = enumerate_matchings(8);
  for (int t = 0; t < 10; ++t) {
    const auto& m = all[rng.below(all.size())];
    std::size_t i = rng.below(4), j = rng.below(4);
    if (i == j) continue;
    CHECK(plucker_identity_check(m, i, j));
  }
  // degree-2 graph, repeated application
  auto g = graph_union(all[3], all[57]);
  for (int t = 0; t < 6; ++t) {
    std::size_t i = rng.below(g.edges.size()), j = rng.below(g.edges.size());
    if (i == j) continue;
    CHECK(plucker_identity_check(g, i, j));
  }
}

TEST_CASE("S_n action intertwines expansion") {
  SplitMix64 rng(29);
  auto all = enumerate_matchings(8);
  for (int t = 0; t < 8; ++t) {
    Perm s = random_perm(8, rng);
    const auto& m = all[rng.below(all.size())];
    CHECK(expand_graph(act(s, m)) == act_on_points(s, expand_graph(m)));
  }
}

TEST_CASE("multihomogeneity of expansions") {
  auto p = expand_graph(Matching(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
  for (auto& [k, c] : p.terms) {
    auto a = p.unpack(k);
    for (int q = 0; q < 8; ++q) CHECK((a[q] == 0 || a[q] == 1));
  }
}

}  // TEST_SUITE

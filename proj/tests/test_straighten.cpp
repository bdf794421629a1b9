#include <doctest.h>

#include "octamod/straighten.hpp"
#include "octamod/sym.hpp"
#include "octamod/util.hpp"

using namespace octamod;

namespace {
Perm random_perm(int n, SplitMix64& rng) {
  Perm p = Perm::identity(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(p.img[i], p.img[rng.below(i + 1)]);
  return p;
}

MultiPoly evaluate_coords(const PlanarBasis& pb, const std::vector<Int>& c) {
  MultiPoly acc;
  bool first = true;
  for (int i = 0; i < pb.size(); ++i) {
    auto t = scale(pb.expansions()[i], c[i]);
    if (first) {
      acc = t;
      first = false;
    } else {
      acc = add(acc, t);
    }
  }
  return acc;
}
}  // namespace

TEST_SUITE("straighten") {

TEST_CASE("planar matchings are unit vectors") {
  PlanarBasis pb(8);
  REQUIRE(pb.size() == 14);
  for (int i = 0; i < 14; ++i) {
    auto c = pb.straighten(pb.matching(i));
    for (int j = 0; j < 14; ++j) CHECK(c[j] == Int(i == j ? 1 : 0));
  }
}

TEST_CASE("single Plucker move example") {
  PlanarBasis pb(8);
  Matching m(8, {{1, 3}, {2, 4}, {5, 6}, {7, 8}});
  auto c = pb.straighten(m);
  auto [m1, s1] = canonical_matching(Matching(8, {{1, 4}, {2, 3}, {5, 6}, {7, 8}}));
  auto [m2, s2] = canonical_matching(Matching(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}));
  int i1 = pb.planar_index(m1), i2 = pb.planar_index(m2);
  for (int j = 0; j < 14; ++j)
    CHECK(c[j] == Int(j == i1 || j == i2 ? 1 : 0));
}

TEST_CASE("straighten re-expands to the input on all 105 matchings") {
  PlanarBasis pb(8);
  for (const auto& m : enumerate_matchings(8)) {
    auto c = pb.straighten(m);
    CHECK(evaluate_coords(pb, c) == expand_graph(m));
  }
}

TEST_CASE("straighten agrees with the solve oracle on all 105 matchings") {
  PlanarBasis pb(8);
  for (const auto& m : enumerate_matchings(8))
    CHECK(pb.straighten(m) == pb.straighten_by_solve(m));
}

TEST_CASE("solve oracle handles directed input and n=6") {
  PlanarBasis pb6(6);
  REQUIRE(pb6.size() == 5);
  for (const auto& m : enumerate_matchings(6))
    CHECK(pb6.straighten(m) == pb6.straighten_by_solve(m));
  Matching rev(6, {{2, 1}, {3, 6}, {4, 5}});
  CHECK(pb6.straighten(rev) == pb6.straighten_by_solve(rev));
}

TEST_CASE("action matrices form a homomorphism into GL(14,Z)") {
  PlanarBasis pb(8);
  SplitMix64 rng(41);
  CHECK(pb.action_matrix(Perm::identity(8)) == mat_identity(14));
  for (int t = 0; t < 6; ++t) {
    Perm s = random_perm(8, rng), u = random_perm(8, rng);
    auto as = pb.action_matrix(s), au = pb.action_matrix(u);
    CHECK(pb.action_matrix(s.compose(u)) == mat_mul(as, au));
    CHECK(mat_mul(as, pb.action_matrix(s.inverse())) == mat_identity(14));
  }
  CHECK(mat_trace(pb.action_matrix(Perm::identity(8))) == Int(14));
}

TEST_CASE("trace character is irreducible of norm one") {
  PlanarBasis pb(8);
  auto classes = conjugacy_classes(8);
  Int norm(0);
  for (const auto& c : classes) {
    Int t = pb.action_trace(class_representative(c.type, 8));
    norm.addmul(Int(c.size), t * t);
  }
  CHECK(norm == Int(40320));
}

}  // TEST_SUITE

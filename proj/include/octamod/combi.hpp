#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace octamod {

// Permutation of {1..n}; img[i] is the image of i+1.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int apply(int v) const { return img[v - 1]; }
  int sign() const;
  Perm compose(const Perm& rhs) const;  // this after rhs: v -> this(rhs(v))
  Perm inverse() const;
  std::vector<int> cycle_type() const;  // weakly decreasing
};

// weakly decreasing positive parts
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);

struct ConjClass {
  Partition type;
  std::int64_t size;
};

// sizes n!/z_mu, summing to n!
std::vector<ConjClass> conjugacy_classes(int n);

// canonical representative with cycles (1..p1)(p1+1..)...
Perm class_representative(const Partition& type, int n);

std::int64_t factorial(int n);

// cycle type of sigma^k given the type of sigma: each i-cycle splits into
// gcd(i,k) cycles of length i/gcd(i,k)
Partition power_cycle_type(const Partition& type, int k);

// Directed multigraph on labeled circle points {1..n}, edges as ordered pairs.
struct DirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  DirectedGraph() = default;
  DirectedGraph(int n_, std::vector<std::pair<int, int>> e);

  bool has_loop() const;
  bool is_regular(int d) const;  // every vertex in exactly d endpoints
  int degree() const;            // common valence; fails if not regular
  std::string to_json() const;   // sorted edge-pair list

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
  friend bool operator<(const DirectedGraph& a, const DirectedGraph& b) {
    return a.edges < b.edges;
  }
};

using Matching = DirectedGraph;  // degree one

// chords strictly interleave on the circle; shared endpoints never cross
bool crossing(std::pair<int, int> e1, std::pair<int, int> e2);

int count_crossings(const DirectedGraph& g);

// all (n-1)!! perfect matchings, edges low->high, lexicographic order
std::vector<Matching> enumerate_matchings(int n);

// all loop-free degree-d multigraphs with pairwise non-crossing chords,
// canonical edge direction low->high, lexicographic edge-multiset order
std::vector<DirectedGraph> enumerate_noncrossing_regular(int n, int d);

// relabels endpoints, preserving the written direction of each pair
DirectedGraph act(const Perm& sigma, const DirectedGraph& g);

// Sign of the permutation (1..n) -> (a1,b1,...,ak,bk), edges listed with
// first endpoints ascending. Flips under single-edge reversal.
int matching_sign(const Matching& m);

// Flip edges to low->high and sort; returns the sign picked up (-1 per flip).
std::pair<Matching, int> canonical_matching(const Matching& m);

DirectedGraph graph_union(const DirectedGraph& a, const DirectedGraph& b);

}  // namespace octamod

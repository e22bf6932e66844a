#pragma once

#include <map>
#include <vector>

#include "cgwc/graph.hpp"

namespace cgwc {

// Family of vertex subsets with the separation covering property: for every
// disjoint A, B with |A| <= a, |B| <= b there is S in sets with A inside S
// and B disjoint from S.
struct SepFamily {
  int universe_size = 0;
  Weight a = 0;
  Weight b = 0;
  std::vector<std::vector<int>> sets;
};

// Deterministic covering family over 0..n-1. Correct by construction; the
// covering property is additionally verified exhaustively at small scale
// (n <= 12 and a+b <= 4).
SepFamily universal_family(int n, Weight a, Weight b);

// Exhaustive covering check (test oracle); cost grows as C(n,a)*C(n,b).
bool verify_covering(const SepFamily& family);

// All connected sets B with v in B, |B| = b+1 and |N(B)| = f, sorted.
std::vector<std::vector<int>> enumerate_connected_sets(const WeightedGraph& g, int v, int b, int f);

// All connected sets B with v in B and |B| <= max_size, sorted. Support
// enumeration for the solver's reduction rules.
std::vector<std::vector<int>> connected_sets_up_to(const WeightedGraph& g, int v, int max_size);

struct RestrictedBfsResult {
  WeightedGraph subgraph;           // induced on the labeled vertices
  std::vector<int> old_ids;         // subgraph id -> original id
  std::map<int, int> labels;        // original id -> level <= r
};

// Degree-restricted BFS from u: each dequeued vertex of level <= r-1 explores
// only its min(r, deg) lowest-id neighbors. Size obeys (r^{r+1}-1)/(r-1)
// for r >= 2.
RestrictedBfsResult restricted_bfs(const WeightedGraph& g, int u, int r);

// The restricted-BFS size bound, saturating.
Weight restricted_bfs_size_bound(Weight r);

}  // namespace cgwc

#pragma once

#include <vector>

#include "cgwc/graph.hpp"

namespace cgwc {

struct SeparationVerdict {
  enum class Kind { kGoodSeparation, kUnbreakable };
  Kind kind = Kind::kUnbreakable;
  // GoodSeparation: bipartition (A lexicographically smallest side) and its
  // cut weight.
  std::vector<int> side_a, side_b;
  Weight cut_weight = 0;
  // Unbreakable: every partition of cut weight <= p has a side of size
  // <= q_out (= p*q for the search threshold q).
  Weight q_out = 0;
  Weight p = 0;

  bool good() const { return kind == Kind::kGoodSeparation; }
};

// Either a (q,p)-good edge separation (both sides connected, both larger
// than q, cut weight <= p) or the certificate that g is (p*q, p)-unbreakable.
// Exhaustive over candidate cut-edge subsets at desk scale, with a seeded
// randomized-contraction fallback above the enumeration budget; every good
// separation is re-verified before being returned.
SeparationVerdict find_good_separation(const WeightedGraph& g, Weight q, Weight p);

// Exhaustive truth of the unbreakability predicate; |V| <= cap.
bool verify_unbreakable(const WeightedGraph& g, Weight q, Weight p, int cap = 16);

}  // namespace cgwc

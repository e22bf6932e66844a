#pragma once

#include <stdexcept>
#include <vector>

#include "cgwc/boundaried.hpp"
#include "cgwc/graph.hpp"

namespace cgwc {

struct FamilyCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cut reduction of a properly boundaried graph with respect to p: per
// component, contract the product of minimum-separator bipartitions over all
// boundary splits (plus the boundary-to-closest-vertex split), keep boundary
// vertices as singletons, then truncate edge weights at p. The result has
// boundary ids 0..r-1 in the input boundary order; old_to_new, when given,
// maps input vertices to their blocks.
BoundariedGraph cut_reduce(const BoundariedGraph& h, Weight p,
                           std::vector<int>* old_to_new = nullptr);

// Size bound 2^(2^(r-1)) + r for the reduction of an r-boundaried component,
// saturating.
Weight cut_reduction_size_bound(int r);

// The family of all pairwise nonisomorphic properly r-boundaried weighted
// graphs with at most 2^(2^(r-1))+r vertices, weights in 1..s, where every
// component reaching outside the boundary has a vertex v with
// lambda(x, v) <= s. Members have boundary <0..r-1>. r = 0 yields the empty
// graph. Throws FamilyCapExceeded when the vertex bound exceeds cap or the
// enumeration is too large for desk scale.
std::vector<BoundariedGraph> enumerate_family(int r, Weight s, Weight cap);

}  // namespace cgwc

#pragma once

#include <vector>

#include "cgwc/graph.hpp"

namespace cgwc {

// Graph with an ordered tuple of distinct boundary vertices. Two boundaried
// graphs differing only in boundary order are distinct.
struct BoundariedGraph {
  WeightedGraph graph;
  std::vector<int> boundary;

  BoundariedGraph() = default;
  // Throws on duplicate or out-of-range boundary vertices.
  BoundariedGraph(WeightedGraph g, std::vector<int> b);

  int boundary_size() const { return static_cast<int>(boundary.size()); }

  bool operator==(const BoundariedGraph& o) const {
    return graph == o.graph && boundary == o.boundary;
  }
};

// True iff the boundary vertices are pairwise nonadjacent and every component
// contains at least one boundary vertex.
bool is_properly_boundaried(const BoundariedGraph& h);

// Glue f and h by identifying their i-th boundary vertices. h must be properly
// boundaried; f carries no such restriction. Vertices of f keep their ids,
// non-boundary vertices of h follow. glued_h_ids, when given, receives the
// id each vertex of h takes in the result.
WeightedGraph boundary_sum(const BoundariedGraph& f, const BoundariedGraph& h,
                           std::vector<int>* glued_h_ids = nullptr);

}  // namespace cgwc

#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "cgwc/weight.hpp"

namespace cgwc {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

// Simple undirected graph with positive integer edge weights.
// Vertex ids are dense: 0..n-1. Immutable once built (the mutating
// methods exist for construction only; algorithms copy).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Throws on loops, duplicate edges, out-of-range ids, weight < 1,
  // and when the running total weight would overflow.
  void add_edge(int u, int v, Weight w);

  bool has_edge(int u, int v) const;
  // Weight of edge uv; 0 when absent.
  Weight weight(int u, int v) const;

  const std::map<Edge, Weight>& edges() const { return edges_; }
  const std::vector<std::pair<int, Weight>>& neighbors(int v) const;
  int degree(int v) const;

  Weight total_weight() const { return total_weight_; }

  // Sum of weights of edges with one end in a and the other in b (disjoint).
  Weight weight_between(const std::vector<int>& a, const std::vector<int>& b) const;
  // Sum of weights of edges leaving s.
  Weight weight_out(const std::vector<int>& s) const;

  // Connected components, each sorted ascending, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  // Component vertex sets of this graph with the given edges removed.
  std::vector<std::vector<int>> components_without(const EdgeSet& removed) const;

  // Induced subgraph on `vertices` (sorted ascending); `old_ids[new]` maps back.
  WeightedGraph induced(const std::vector<int>& vertices, std::vector<int>* old_ids = nullptr) const;
  WeightedGraph remove_edges(const EdgeSet& removed) const;

  bool operator==(const WeightedGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::map<Edge, Weight> edges_;
  std::vector<std::vector<std::pair<int, Weight>>> adj_;
  Weight total_weight_ = 0;
};

// Weighted contraction of u_set into a single vertex. The merged vertex takes
// the slot of min(u_set) in the dense relabeling; parallel edges collapse by
// weight summation, internal edges vanish. id_map[old] = new id.
WeightedGraph contract_set(const WeightedGraph& g, const std::vector<int>& u_set,
                           std::vector<int>* id_map = nullptr);

}  // namespace cgwc

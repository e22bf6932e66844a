#pragma once

#include <optional>
#include <vector>

#include "cgwc/graph.hpp"

namespace cgwc {

struct CutResult {
  Weight weight = 0;
  // Realizing bipartition (A, B) and the separator edges, absent when the
  // weight is +inf (single-vertex graph) or no cut exists.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> partition;
  std::optional<EdgeSet> edges;
};

// Weighted global min cut via Stoer-Wagner; lowest-id tie-breaking.
// Single vertex -> +inf. Throws on disconnected or empty input.
CutResult global_min_cut(const WeightedGraph& g);

// lambda^w(g) only; +inf for a single vertex. Throws on disconnected input.
Weight global_connectivity(const WeightedGraph& g);

// Minimum (a,b)-separator via max flow between contracted super-terminals.
// The partition is the canonical source-minimal cut (residual reachability).
// Throws when a, b overlap or either is empty.
CutResult min_separator(const WeightedGraph& g, const std::vector<int>& a,
                        const std::vector<int>& b);

// Separator weight only.
Weight min_separator_weight(const WeightedGraph& g, const std::vector<int>& a,
                            const std::vector<int>& b);

// Equivalence classes of lambda^w(u,v) >= alpha, each sorted, ordered by
// smallest member.
std::vector<std::vector<int>> alpha_classes(const WeightedGraph& g, Weight alpha);

namespace detail {

// Global min cut weight of the graph given as a dense weight matrix over
// vertices 0..n-1 (matrix[i*n+j]). The matrix must describe a connected
// graph; n == 1 yields +inf. Scratch is reused across calls.
class DenseMinCut {
 public:
  Weight run(std::vector<Weight>& matrix, int n);

 private:
  std::vector<Weight> strength_;
  std::vector<char> merged_, added_;
  std::vector<int> order_;
};

// Repeated component-profile queries against one base graph with varying
// deleted edge sets; all buffers are reused across calls.
class ProfileScanner {
 public:
  explicit ProfileScanner(const WeightedGraph& g);

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::tuple<int, int, Weight>>& edges() const { return edges_; }

  // Sorted connectivities of the components of g minus the edges whose index
  // is flagged in `removed` (size edge_count()).
  const std::vector<Weight>& profile(const std::vector<char>& removed);

 private:
  int n_;
  std::vector<std::tuple<int, int, Weight>> edges_;
  DenseMinCut mincut_;
  std::vector<int> parent_, local_, comp_vertices_, comp_offsets_;
  std::vector<Weight> matrix_, result_;
};

}  // namespace detail

}  // namespace cgwc

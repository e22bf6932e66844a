#pragma once

#include <optional>
#include <vector>

#include "cgwc/conn_spec.hpp"
#include "cgwc/graph.hpp"

namespace cgwc {

// Deletion set plus the certificate it induces: the components of g - edges
// and their weighted connectivities, recomputed from scratch.
struct Solution {
  EdgeSet edges;
  Weight total_weight = 0;
  std::vector<std::pair<std::vector<int>, Weight>> components;
};

// Builds the certificate for F on g (components ordered by smallest vertex).
Solution make_solution(const WeightedGraph& g, const EdgeSet& f);

// Full from-scratch check: f subset of allowed, w(f) <= k, exactly |spec|
// components, sorted connectivities dominate spec.
bool is_valid_solution(const WeightedGraph& g, const EdgeSet& allowed, const ConnSpec& spec,
                       Weight k, const EdgeSet& f);

// Sorted connectivity profile of g - f.
ConnSpec component_profile(const WeightedGraph& g, const EdgeSet& f);

}  // namespace cgwc

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "cgwc/solution.hpp"

namespace cgwc {

struct OracleBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_vertices = 16;
  int max_edges = 20;
  Weight max_weight = 1'000'000;
  Weight max_budget = 16;
};

// One scanned candidate deletion set with its certificate data.
struct ProfileEntry {
  std::vector<Edge> edges;  // sorted
  Weight weight = 0;
  ConnSpec profile;
};

// All F subseteq L with w(F) <= k, ordered by (weight, lexicographic edges),
// each with the component profile of g - F. Edge count of any such F is at
// most k since weights are >= 1.
std::vector<ProfileEntry> oracle_profile_table(const WeightedGraph& g, const EdgeSet& allowed,
                                               Weight k, const OracleBudget& budget = {});

// Exhaustive minimum-weight-first scan accepting the first F whose component
// count equals |spec| and whose sorted connectivities dominate spec.
std::optional<Solution> oracle_solve(const WeightedGraph& g, const EdgeSet& allowed,
                                     const ConnSpec& spec, Weight k,
                                     const OracleBudget& budget = {});

// All graphs on at most n_max vertices up to isomorphism, with every edge
// weight assignment drawn from weight_set, in deterministic order.
// n_max <= 8.
void enumerate_graphs(int n_max, const std::vector<Weight>& weight_set,
                      const std::function<void(const WeightedGraph&)>& visit);

// Convenience collector for small runs.
std::vector<WeightedGraph> enumerate_graphs_list(int n_max, const std::vector<Weight>& weight_set);

}  // namespace cgwc

#include "cgwc/solution.hpp"

#include "cgwc/connectivity.hpp"

namespace cgwc {

Solution make_solution(const WeightedGraph& g, const EdgeSet& f) {
  Solution s;
  s.edges = f;
  for (const Edge& e : f) s.total_weight = sat_add(s.total_weight, g.weight(e.u, e.v));
  WeightedGraph stripped = g.remove_edges(f);
  for (const auto& comp : stripped.components()) {
    WeightedGraph sub = stripped.induced(comp);
    s.components.emplace_back(comp, global_connectivity(sub));
  }
  return s;
}

ConnSpec component_profile(const WeightedGraph& g, const EdgeSet& f) {
  WeightedGraph stripped = g.remove_edges(f);
  std::vector<Weight> lambdas;
  for (const auto& comp : stripped.components())
    lambdas.push_back(global_connectivity(stripped.induced(comp)));
  return ConnSpec(std::move(lambdas));
}

bool is_valid_solution(const WeightedGraph& g, const EdgeSet& allowed, const ConnSpec& spec,
                       Weight k, const EdgeSet& f) {
  Weight total = 0;
  for (const Edge& e : f) {
    if (!allowed.count(e)) return false;
    if (!g.has_edge(e.u, e.v)) return false;
    total = sat_add(total, g.weight(e.u, e.v));
  }
  if (total > k) return false;
  ConnSpec profile = component_profile(g, f);
  if (profile.size() != spec.size()) return false;
  return spec_precedes(spec, profile);
}

}  // namespace cgwc

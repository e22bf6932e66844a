#pragma once

#include <optional>
#include <vector>

#include "cgwc/solution.hpp"
#include "cgwc/solver_recursive.hpp"

namespace cgwc {

// Result of peeling components whose connectivity exceeds the budget: the
// shrunken instance plus the vertex map back into the input graph.
struct ReducedInstance {
  WeightedGraph graph;
  std::vector<int> old_ids;  // reduced id -> input id
  ConnSpec spec;
};

// Deletes every component with connectivity above k together with the largest
// demand it can serve, largest-connectivity components first. nullopt when
// some such component serves no demand.
std::optional<ReducedInstance> remove_high_components(const WeightedGraph& g, const ConnSpec& spec,
                                                      Weight k);

// Solver for graphs whose components all have connectivity exactly lambda
// (<= the global budget): guesses how many components split and into which
// demand tuples, prices each (tuple, component) pair via the connected
// solver, and accepts on a cheap enough assignment.
std::optional<Solution> solve_uniform(const WeightedGraph& h, Weight lambda, const ConnSpec& spec,
                                      Weight k, const RecursionConfig& cfg);

// Full solver: pre-checks, high-component removal, and the level-wise
// composition across connectivity levels 1..k.
std::optional<Solution> solve_cgwc(const WeightedGraph& g, const ConnSpec& spec, Weight k,
                                   const RecursionConfig& cfg);

// Minimum-cost assignment saturating the rows of a rectangular cost matrix
// (rows <= cols, +inf entries forbidden): returns (cost, column per row), or
// nullopt when no finite assignment exists. Deterministic index tie-breaking.
std::optional<std::pair<Weight, std::vector<int>>> min_cost_assignment(
    const std::vector<std::vector<Weight>>& cost);

}  // namespace cgwc

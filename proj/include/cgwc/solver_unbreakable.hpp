#pragma once

#include <optional>
#include <vector>

#include "cgwc/boundaried.hpp"
#include "cgwc/conn_spec.hpp"
#include "cgwc/solution.hpp"

namespace cgwc {

// Annotated instance: solutions must be drawn from the allowed edge set.
struct AnnotatedInstance {
  WeightedGraph graph;  // connected
  EdgeSet allowed;      // L subset of E(graph)
  ConnSpec spec;
  Weight budget = 0;
};

// State of the candidate-set growth: the grown set S, the components of
// G - S, and the indices of components holding a vertex v with direct
// attachment weight w(v,S) below the big component's demand.
struct GoodSetState {
  std::vector<int> s_set;
  std::vector<std::vector<int>> components;
  std::vector<int> index_set;
};

// Applies the growth rules for candidate set s0 (target connectivity
// lambda_i <= k for the big component): discard when |S| stays <= q, absorb
// components that cannot be cut away (non-allowed or heavy attachment, or
// size > q), absorb across lightly separable seeds, reject on light globally
// separable seeds, and finally bound the loose components. nullopt = discard.
std::optional<GoodSetState> grow_good_set(const WeightedGraph& g, const EdgeSet& allowed,
                                          Weight lambda_i, Weight q, Weight k,
                                          const std::vector<int>& s0);

// Composes per-component deletion choices into one set detaching and
// splitting small components so that the remaining demands are met; the big
// component keeps S and every untouched component. nullopt = infeasible.
std::optional<EdgeSet> dp_compose(const WeightedGraph& g, const EdgeSet& allowed,
                                  const GoodSetState& state, const ConnSpec& spec_minus_i,
                                  Weight k);

// Annotated solver for connected (q,2k)-unbreakable graphs. The precondition
// is verified exhaustively at desk scale (small n with meaningful q).
std::optional<Solution> solve_annotated_unbreakable(const AnnotatedInstance& inst, Weight q);

struct BorderedEntry {
  Weight k_min = 0;
  EdgeSet witness;  // edges of the host graph (subset of allowed)
};

// Output of the bordered solver: for every completion in the family and
// every sub-spec, the minimum budget admitting a solution plus one witness.
struct BorderedTable {
  std::vector<BoundariedGraph> family;
  std::vector<ConnSpec> subspecs;
  // table[member][subspec]
  std::vector<std::vector<std::optional<BorderedEntry>>> entries;

  const std::optional<BorderedEntry>& lookup(int member, const ConnSpec& spec) const;
};

// Bordered solver on connected (q,2k)-unbreakable graphs: glues every family
// completion onto the boundary and solves the annotated instance for every
// sub-spec and ascending budget. Throws FamilyCapExceeded when the completion
// family is too large to enumerate.
BorderedTable solve_bordered_unbreakable(const BoundariedGraph& g, const EdgeSet& allowed,
                                         const ConnSpec& spec, Weight k, Weight q,
                                         Weight family_cap);

}  // namespace cgwc

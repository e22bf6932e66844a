#pragma once

// Test-side helpers and independent brute-force oracles. These stay separate
// from the library so the checks they back do not share the code paths they
// validate.

#include <optional>
#include <vector>

#include "cgwc/conn_spec.hpp"
#include "cgwc/graph.hpp"

namespace testsupport {

using cgwc::ConnSpec;
using cgwc::Edge;
using cgwc::EdgeSet;
using cgwc::Weight;
using cgwc::WeightedGraph;

WeightedGraph graph_from_edges(int n, const std::vector<std::tuple<int, int, Weight>>& edges);

WeightedGraph path_graph(int n, Weight w = 1);
WeightedGraph cycle_graph(int n, Weight w = 1);
WeightedGraph complete_graph(int n, Weight w = 1);
WeightedGraph star_graph(int leaves, Weight w = 1);
// Two complete blocks joined by one bridge of the given weight.
WeightedGraph two_blocks_bridge(int block, Weight bridge_weight = 1);

// Global min cut weight by scanning all bipartitions; +inf for one vertex.
Weight brute_global_min_cut(const WeightedGraph& g);
// Minimum (a,b)-separator weight by scanning all bipartitions.
Weight brute_min_separator(const WeightedGraph& g, const std::vector<int>& a,
                           const std::vector<int>& b);

// Sorted connectivity profile of g - f via the bipartition scan.
ConnSpec brute_profile(const WeightedGraph& g, const EdgeSet& f);

// Decision by full scan over F within the allowed set.
bool brute_decide(const WeightedGraph& g, const EdgeSet& allowed, const ConnSpec& spec, Weight k);

// Deterministic pseudo-random weighted graph.
WeightedGraph random_graph(int n, double edge_probability, Weight max_weight, unsigned seed);

// All subsets of {0..n-1} as sorted vertex lists.
std::vector<std::vector<int>> all_subsets(int n);

EdgeSet all_edges(const WeightedGraph& g);

}  // namespace testsupport

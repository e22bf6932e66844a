#include "support.hpp"

#include <algorithm>
#include <random>

namespace testsupport {

WeightedGraph graph_from_edges(int n, const std::vector<std::tuple<int, int, Weight>>& edges) {
  WeightedGraph g(n);
  for (auto [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

WeightedGraph path_graph(int n, Weight w) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, w);
  return g;
}

WeightedGraph cycle_graph(int n, Weight w) {
  WeightedGraph g = path_graph(n, w);
  if (n >= 3) g.add_edge(n - 1, 0, w);
  return g;
}

WeightedGraph complete_graph(int n, Weight w) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, w);
  return g;
}

WeightedGraph star_graph(int leaves, Weight w) {
  WeightedGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i, w);
  return g;
}

WeightedGraph two_blocks_bridge(int block, Weight bridge_weight) {
  WeightedGraph g(2 * block);
  for (int i = 0; i < block; ++i)
    for (int j = i + 1; j < block; ++j) {
      g.add_edge(i, j, 1);
      g.add_edge(block + i, block + j, 1);
    }
  g.add_edge(block - 1, block, bridge_weight);
  return g;
}

Weight brute_global_min_cut(const WeightedGraph& g) {
  int n = g.vertex_count();
  if (n == 1) return cgwc::kInfWeight;
  Weight best = cgwc::kInfWeight;
  for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    std::vector<int> a = {0}, b;
    for (int v = 1; v < n; ++v)
      ((mask >> (v - 1)) & 1 ? a : b).push_back(v);
    if (b.empty()) continue;
    best = std::min(best, g.weight_between(a, b));
  }
  return best;
}

Weight brute_min_separator(const WeightedGraph& g, const std::vector<int>& a,
                           const std::vector<int>& b) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int v : a) side[v] = 0;
  for (int v : b) side[v] = 1;
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (side[v] < 0) free_vertices.push_back(v);
  Weight best = cgwc::kInfWeight;
  for (unsigned mask = 0; mask < (1u << free_vertices.size()); ++mask) {
    std::vector<int> left(a), right(b);
    for (size_t i = 0; i < free_vertices.size(); ++i)
      ((mask >> i) & 1 ? left : right).push_back(free_vertices[i]);
    best = std::min(best, g.weight_between(left, right));
  }
  return best;
}

ConnSpec brute_profile(const WeightedGraph& g, const EdgeSet& f) {
  WeightedGraph stripped = g.remove_edges(f);
  std::vector<Weight> lambdas;
  for (const auto& comp : stripped.components())
    lambdas.push_back(brute_global_min_cut(stripped.induced(comp)));
  return ConnSpec(std::move(lambdas));
}

bool brute_decide(const WeightedGraph& g, const EdgeSet& allowed, const ConnSpec& spec, Weight k) {
  std::vector<Edge> pool(allowed.begin(), allowed.end());
  int m = static_cast<int>(pool.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    EdgeSet f;
    Weight weight = 0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        f.insert(pool[i]);
        weight += g.weight(pool[i].u, pool[i].v);
      }
    if (weight > k) continue;
    ConnSpec profile = brute_profile(g, f);
    if (profile.size() == spec.size() && spec_precedes(spec, profile)) return true;
  }
  return false;
}

WeightedGraph random_graph(int n, double edge_probability, Weight max_weight, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_probability) g.add_edge(i, j, weight(rng));
  return g;
}

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

EdgeSet all_edges(const WeightedGraph& g) {
  EdgeSet out;
  for (const auto& [e, w] : g.edges()) out.insert(e);
  return out;
}

}  // namespace testsupport

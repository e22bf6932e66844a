#include "cgwc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cgwc/connectivity.hpp"

namespace cgwc {

namespace {

void check_budget(const WeightedGraph& g, const EdgeSet& allowed, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices)
    throw OracleBudgetExceeded("oracle: vertex budget exceeded");
  if (static_cast<int>(allowed.size()) > budget.max_edges)
    throw OracleBudgetExceeded("oracle: edge budget exceeded");
  for (const auto& [e, w] : g.edges())
    if (w > budget.max_weight) throw OracleBudgetExceeded("oracle: weight budget exceeded");
}

}  // namespace

std::vector<ProfileEntry> oracle_profile_table(const WeightedGraph& g, const EdgeSet& allowed,
                                               Weight k, const OracleBudget& budget) {
  check_budget(g, allowed, budget);
  for (const Edge& e : allowed)
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("allowed edge not in graph");

  detail::ProfileScanner scanner(g);
  const auto& all = scanner.edges();
  std::vector<int> pool;  // indices of allowed edges in the scanner order
  for (size_t i = 0; i < all.size(); ++i)
    if (allowed.count(Edge(std::get<0>(all[i]), std::get<1>(all[i]))))
      pool.push_back(static_cast<int>(i));
  int m = static_cast<int>(pool.size());
  // Every weight is >= 1, so any candidate has at most k edges.
  int max_take = static_cast<int>(std::min<Weight>(k, m));

  std::vector<ProfileEntry> table;
  std::vector<char> removed(all.size(), 0);
  std::vector<int> chosen;
  auto emit = [&](Weight weight) {
    ProfileEntry entry;
    for (int idx : chosen)
      entry.edges.push_back(Edge(std::get<0>(all[idx]), std::get<1>(all[idx])));
    entry.weight = weight;
    entry.profile = ConnSpec(scanner.profile(removed));
    table.push_back(std::move(entry));
  };
  std::function<void(int, Weight)> rec = [&](int start, Weight weight) {
    emit(weight);
    if (static_cast<int>(chosen.size()) == max_take) return;
    for (int i = start; i < m; ++i) {
      Weight nw = sat_add(weight, std::get<2>(all[pool[i]]));
      if (nw > k) continue;
      chosen.push_back(pool[i]);
      removed[pool[i]] = 1;
      rec(i + 1, nw);
      removed[pool[i]] = 0;
      chosen.pop_back();
    }
  };
  rec(0, 0);
  std::stable_sort(table.begin(), table.end(), [](const ProfileEntry& a, const ProfileEntry& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.edges < b.edges;
  });
  return table;
}

std::optional<Solution> oracle_solve(const WeightedGraph& g, const EdgeSet& allowed,
                                     const ConnSpec& spec, Weight k, const OracleBudget& budget) {
  for (const ProfileEntry& entry : oracle_profile_table(g, allowed, k, budget)) {
    if (entry.profile.size() != spec.size()) continue;
    if (!spec_precedes(spec, entry.profile)) continue;
    EdgeSet f(entry.edges.begin(), entry.edges.end());
    return make_solution(g, f);
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint32_t;

int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Lexicographic over pairs (i,j), i < j.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Edge-index remap tables, one per permutation.
std::vector<std::vector<int>> edge_maps(int n, const std::vector<std::vector<int>>& perms) {
  int m = n * (n - 1) / 2;
  std::vector<std::vector<int>> maps(perms.size(), std::vector<int>(m));
  for (size_t pi = 0; pi < perms.size(); ++pi)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        maps[pi][edge_index(n, i, j)] = edge_index(n, perms[pi][i], perms[pi][j]);
  return maps;
}

Mask permute_mask(Mask mask, const std::vector<int>& emap) {
  Mask out = 0;
  while (mask) {
    int bit = __builtin_ctz(mask);
    mask &= mask - 1;
    out |= Mask(1) << emap[bit];
  }
  return out;
}

Mask canonical_mask(Mask mask, const std::vector<std::vector<int>>& emaps) {
  Mask best = mask;
  for (const auto& emap : emaps) best = std::min(best, permute_mask(mask, emap));
  return best;
}

// Unlabeled simple graphs on exactly n vertices as canonical edge masks,
// ascending. Direct scan through 2^C(n,2) masks for n <= 6, canonical
// augmentation from (n-1)-vertex classes for n = 7.
const std::vector<Mask>& canonical_masks(int n) {
  static std::map<int, std::vector<Mask>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Mask> result;
  auto emaps = edge_maps(n, all_permutations(n));
  if (n <= 6) {
    int m = n * (n - 1) / 2;
    for (Mask mask = 0; mask < (Mask(1) << m); ++mask)
      if (canonical_mask(mask, emaps) == mask) result.push_back(mask);
  } else {
    std::set<Mask> seen;
    for (Mask base : canonical_masks(n - 1)) {
      // Re-index the (n-1)-vertex edges into the n-vertex pair ordering.
      Mask lifted = 0;
      for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j)
          if (base & (Mask(1) << edge_index(n - 1, i, j)))
            lifted |= Mask(1) << edge_index(n, i, j);
      for (Mask nb = 0; nb < (Mask(1) << (n - 1)); ++nb) {
        Mask mask = lifted;
        for (int i = 0; i < n - 1; ++i)
          if (nb & (Mask(1) << i)) mask |= Mask(1) << edge_index(n, i, n - 1);
        seen.insert(canonical_mask(mask, emaps));
      }
    }
    result.assign(seen.begin(), seen.end());
  }
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

void enumerate_graphs(int n_max, const std::vector<Weight>& weight_set,
                      const std::function<void(const WeightedGraph&)>& visit) {
  if (n_max < 1 || n_max > 7) throw std::invalid_argument("enumerate_graphs: n_max must be in 1..7");
  if (weight_set.empty()) throw std::invalid_argument("enumerate_graphs: empty weight set");
  int n = n_max;
  int m_total = n * (n - 1) / 2;
  std::vector<Weight> weights = weight_set;
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

  for (Mask mask : canonical_masks(n)) {
    std::vector<std::pair<int, int>> edge_list;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask & (Mask(1) << edge_index(n, i, j))) edge_list.emplace_back(i, j);
    (void)m_total;
    // Odometer over weight assignments.
    std::vector<size_t> pick(edge_list.size(), 0);
    while (true) {
      WeightedGraph g(n);
      for (size_t i = 0; i < edge_list.size(); ++i)
        g.add_edge(edge_list[i].first, edge_list[i].second, weights[pick[i]]);
      visit(g);
      size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == weights.size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
      if (pick.empty()) break;
    }
  }
}

std::vector<WeightedGraph> enumerate_graphs_list(int n_max, const std::vector<Weight>& weight_set) {
  std::vector<WeightedGraph> out;
  enumerate_graphs(n_max, weight_set, [&](const WeightedGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace cgwc

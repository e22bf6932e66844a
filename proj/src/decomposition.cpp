#include "cgwc/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace cgwc {

namespace {

bool check_good_separation(const WeightedGraph& g, const std::vector<int>& a,
                           const std::vector<int>& b, Weight q, Weight p) {
  if (static_cast<Weight>(a.size()) <= q || static_cast<Weight>(b.size()) <= q) return false;
  if (g.weight_between(a, b) > p) return false;
  return g.induced(a).is_connected() && g.induced(b).is_connected();
}

double subset_count(int m, int k) {
  double total = 0, c = 1;
  for (int i = 0; i <= k; ++i) {
    total += c;
    c = c * (m - i) / (i + 1);
  }
  return total;
}

constexpr double kEnumerationBudget = 5e6;

}  // namespace

bool verify_unbreakable(const WeightedGraph& g, Weight q, Weight p, int cap) {
  int n = g.vertex_count();
  if (n > cap) throw std::invalid_argument("verify_unbreakable: vertex cap exceeded");
  if (n == 0) return true;
  // All bipartitions with vertex 0 on the A side.
  for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    std::vector<int> a = {0}, b;
    for (int v = 1; v < n; ++v)
      ((mask >> (v - 1)) & 1 ? a : b).push_back(v);
    if (b.empty()) continue;
    if (static_cast<Weight>(a.size()) <= q || static_cast<Weight>(b.size()) <= q) continue;
    if (g.weight_between(a, b) <= p) return false;
  }
  return true;
}

SeparationVerdict find_good_separation(const WeightedGraph& g, Weight q, Weight p) {
  if (!g.is_connected()) throw std::invalid_argument("find_good_separation: disconnected input");
  if (q < 1 || p < 1) throw std::invalid_argument("find_good_separation: q and p must be >= 1");
  int n = g.vertex_count();

  SeparationVerdict unbreakable;
  unbreakable.kind = SeparationVerdict::Kind::kUnbreakable;
  unbreakable.q_out = sat_mul(p, q);
  unbreakable.p = p;

  // No partition can have both sides larger than q.
  if (is_inf(q) || sat_mul(2, sat_add(q, 1)) > n) return unbreakable;

  std::vector<std::pair<Edge, Weight>> pool;
  for (const auto& [e, w] : g.edges())
    if (w <= p) pool.push_back({e, w});
  int m = static_cast<int>(pool.size());
  int max_take = static_cast<int>(std::min<Weight>(p, m));

  bool have_best = false;
  Weight best_weight = 0;
  std::vector<int> best_a, best_b;
  auto consider = [&](const std::vector<int>& a_in, const std::vector<int>& b_in) {
    std::vector<int> a = a_in, b = b_in;
    if (b < a) std::swap(a, b);
    if (static_cast<Weight>(a.size()) <= q || static_cast<Weight>(b.size()) <= q) return;
    Weight w = g.weight_between(a, b);
    if (w > p) return;
    if (!have_best || w < best_weight || (w == best_weight && (a < best_a || (a == best_a && b < best_b)))) {
      have_best = true;
      best_weight = w;
      best_a = a;
      best_b = b;
    }
  };

  if (subset_count(m, max_take) <= kEnumerationBudget) {
    // Exhaustive: a good separation (A,B) is recovered when the removed set
    // equals E(A,B); removing it splits g into exactly the two sides. Flat
    // union-find over the surviving edges keeps the scan cheap.
    std::vector<std::pair<int, int>> all_edges;
    std::vector<char> removed;
    for (const auto& [e, w] : g.edges()) all_edges.emplace_back(e.u, e.v);
    removed.assign(all_edges.size(), 0);
    std::vector<int> edge_index_of_pool(m);
    {
      int idx = 0;
      for (const auto& [e, w] : g.edges()) {
        for (int i = 0; i < m; ++i)
          if (pool[i].first == e) edge_index_of_pool[i] = idx;
        ++idx;
      }
    }
    std::vector<int> parent(n), side_a, side_b;
    auto scan = [&]() {
      for (int v = 0; v < n; ++v) parent[v] = v;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (size_t i = 0; i < all_edges.size(); ++i) {
        if (removed[i]) continue;
        int a = find(all_edges[i].first), b = find(all_edges[i].second);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
      int roots = 0, root_b = -1;
      for (int v = 0; v < n; ++v)
        if (find(v) == v) {
          ++roots;
          if (v != find(0)) root_b = v;
        }
      if (roots != 2) return;
      side_a.clear();
      side_b.clear();
      for (int v = 0; v < n; ++v) (find(v) == root_b ? side_b : side_a).push_back(v);
      consider(side_a, side_b);
    };
    std::function<void(int, Weight, int)> rec = [&](int start, Weight weight, int taken) {
      scan();
      if (taken == max_take) return;
      for (int i = start; i < m; ++i) {
        Weight nw = sat_add(weight, pool[i].second);
        if (nw > p) continue;
        removed[edge_index_of_pool[i]] = 1;
        rec(i + 1, nw, taken + 1);
        removed[edge_index_of_pool[i]] = 0;
      }
    };
    rec(0, 0, 0);
    if (!have_best) {
      // Exhaustive search proved no good separation exists; spot-check the
      // unbreakability certificate where that is cheap.
      if (n <= 12 && !is_inf(unbreakable.q_out) &&
          !verify_unbreakable(g, unbreakable.q_out, p, 12))
        throw std::logic_error("find_good_separation: unbreakability certificate failed");
      return unbreakable;
    }
  } else {
    // Randomized contraction fallback, deterministic seed. Any candidate is
    // verified before being accepted; absence of a find yields the
    // unbreakability verdict (best effort above desk scale).
    std::mt19937_64 rng(0x5eedULL);
    int trials = 64 * n * n;
    for (int trial = 0; trial < trials && !have_best; ++trial) {
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::vector<Edge> edge_list;
      for (const auto& [e, w] : g.edges()) edge_list.push_back(e);
      int groups = n;
      while (groups > 2) {
        const Edge& e = edge_list[rng() % edge_list.size()];
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        parent[std::max(a, b)] = std::min(a, b);
        --groups;
      }
      std::vector<int> a, b;
      int root0 = find(0);
      for (int v = 0; v < n; ++v) (find(v) == root0 ? a : b).push_back(v);
      if (check_good_separation(g, a, b, q, p)) {
        if (b < a) std::swap(a, b);
        have_best = true;
        best_weight = g.weight_between(a, b);
        best_a = a;
        best_b = b;
      }
    }
    if (!have_best) return unbreakable;
  }

  SeparationVerdict out;
  out.kind = SeparationVerdict::Kind::kGoodSeparation;
  out.side_a = best_a;
  out.side_b = best_b;
  out.cut_weight = best_weight;
  out.p = p;
  if (!check_good_separation(g, out.side_a, out.side_b, q, p))
    throw std::logic_error("find_good_separation: verification failed");
  return out;
}

}  // namespace cgwc

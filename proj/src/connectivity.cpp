#include "cgwc/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cgwc {

namespace detail {

Weight DenseMinCut::run(std::vector<Weight>& w, int n) {
  if (n <= 0) throw std::invalid_argument("min cut on empty graph");
  if (n == 1) return kInfWeight;
  merged_.assign(n, 0);
  Weight best = kInfWeight;
  for (int phase = n; phase > 1; --phase) {
    // One minimum-cut phase over the still-unmerged supervertices.
    added_.assign(n, 0);
    strength_.assign(n, 0);
    order_.clear();
    int prev = -1, last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (merged_[v] || added_[v]) continue;
        if (pick == -1 || strength_[v] > strength_[pick]) pick = v;  // ties: lowest id
      }
      added_[pick] = 1;
      order_.push_back(pick);
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v)
        if (!merged_[v] && !added_[v]) strength_[v] = sat_add(strength_[v], w[pick * n + v]);
    }
    Weight cut = 0;
    for (int v = 0; v < n; ++v)
      if (!merged_[v] && v != last) cut = sat_add(cut, w[last * n + v]);
    if (cut < best) best = cut;
    // Merge last into prev (prev keeps the lower id by construction order,
    // but enforce lowest-id representative explicitly).
    int keep = std::min(prev, last), drop = std::max(prev, last);
    for (int v = 0; v < n; ++v) {
      w[keep * n + v] = sat_add(w[keep * n + v], w[drop * n + v]);
      w[v * n + keep] = w[keep * n + v];
    }
    w[keep * n + keep] = 0;
    merged_[drop] = 1;
  }
  return best;
}

ProfileScanner::ProfileScanner(const WeightedGraph& g) : n_(g.vertex_count()) {
  for (const auto& [e, w] : g.edges()) edges_.emplace_back(e.u, e.v, w);
}

const std::vector<Weight>& ProfileScanner::profile(const std::vector<char>& removed) {
  parent_.resize(n_);
  for (int v = 0; v < n_; ++v) parent_[v] = v;
  auto find = [&](int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  };
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (removed[i]) continue;
    auto [u, v, w] = edges_[i];
    int a = find(u), b = find(v);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  // Components grouped by root, vertices in ascending order per group.
  local_.assign(n_, -1);
  comp_vertices_.clear();
  comp_offsets_.clear();
  result_.clear();
  for (int v = 0; v < n_; ++v) {
    if (find(v) != v) continue;
    comp_offsets_.push_back(static_cast<int>(comp_vertices_.size()));
    // gather members
    for (int u = v; u < n_; ++u)
      if (find(u) == v) {
        local_[u] = static_cast<int>(comp_vertices_.size()) - comp_offsets_.back();
        comp_vertices_.push_back(u);
      }
  }
  comp_offsets_.push_back(static_cast<int>(comp_vertices_.size()));
  for (size_t c = 0; c + 1 < comp_offsets_.size(); ++c) {
    int size = comp_offsets_[c + 1] - comp_offsets_[c];
    if (size == 1) {
      result_.push_back(kInfWeight);
      continue;
    }
    matrix_.assign(static_cast<size_t>(size) * size, 0);
    int root = find(comp_vertices_[comp_offsets_[c]]);
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (removed[i]) continue;
      auto [u, v, w] = edges_[i];
      if (find(u) != root) continue;
      int a = local_[u], b = local_[v];
      matrix_[a * size + b] = w;
      matrix_[b * size + a] = w;
    }
    result_.push_back(mincut_.run(matrix_, size));
  }
  std::sort(result_.begin(), result_.end());
  return result_;
}

}  // namespace detail

namespace {

std::vector<Weight> dense_matrix(const WeightedGraph& g) {
  int n = g.vertex_count();
  std::vector<Weight> w(static_cast<size_t>(n) * n, 0);
  for (const auto& [e, wt] : g.edges()) {
    w[e.u * n + e.v] = wt;
    w[e.v * n + e.u] = wt;
  }
  return w;
}

}  // namespace

Weight global_connectivity(const WeightedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("global min cut: graph is disconnected");
  if (g.vertex_count() == 1) return kInfWeight;
  auto w = dense_matrix(g);
  detail::DenseMinCut mc;
  return mc.run(w, g.vertex_count());
}

CutResult global_min_cut(const WeightedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("global min cut: graph is disconnected");
  int n = g.vertex_count();
  CutResult result;
  if (n == 1) {
    result.weight = kInfWeight;
    return result;
  }
  auto w = dense_matrix(g);
  // Stoer-Wagner with explicit supervertex contents so the best phase cut
  // yields the realizing bipartition.
  std::vector<std::vector<int>> group(n);
  for (int v = 0; v < n; ++v) group[v] = {v};
  std::vector<char> merged(n, 0);
  Weight best = kInfWeight;
  std::vector<int> best_side;
  std::vector<Weight> strength(n);
  std::vector<char> added(n);
  for (int phase = n; phase > 1; --phase) {
    std::fill(added.begin(), added.end(), 0);
    std::fill(strength.begin(), strength.end(), 0);
    int prev = -1, last = -1;
    for (int step = 0; step < phase; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (merged[v] || added[v]) continue;
        if (pick == -1 || strength[v] > strength[pick]) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v = 0; v < n; ++v)
        if (!merged[v] && !added[v]) strength[v] = sat_add(strength[v], w[pick * n + v]);
    }
    Weight cut = 0;
    for (int v = 0; v < n; ++v)
      if (!merged[v] && v != last) cut = sat_add(cut, w[last * n + v]);
    if (cut < best) {
      best = cut;
      best_side = group[last];
    }
    int keep = std::min(prev, last), drop = std::max(prev, last);
    for (int v = 0; v < n; ++v) {
      w[keep * n + v] = sat_add(w[keep * n + v], w[drop * n + v]);
      w[v * n + keep] = w[keep * n + v];
    }
    w[keep * n + keep] = 0;
    group[keep].insert(group[keep].end(), group[drop].begin(), group[drop].end());
    merged[drop] = 1;
  }

  std::sort(best_side.begin(), best_side.end());
  std::vector<char> in_side(n, 0);
  for (int v : best_side) in_side[v] = 1;
  // Put the side containing vertex 0 first.
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (in_side[v] == in_side[0] ? a : b).push_back(v);
  EdgeSet cut_edges;
  for (const auto& [e, wt] : g.edges())
    if (in_side[e.u] != in_side[e.v]) cut_edges.insert(e);
  result.weight = best;
  result.partition = {a, b};
  result.edges = cut_edges;
  return result;
}

namespace {

// Dinic max flow on an undirected network.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_undirected(int u, int v, Weight cap) {
    add_arc(u, v, cap);
    add_arc(v, u, cap);
  }

  Weight run(int s, int t) {
    Weight flow = 0;
    while (bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (Weight pushed = dfs(s, t, kInfWeight)) flow = sat_add(flow, pushed);
    }
    return flow;
  }

  // Residual-reachable set from s (call after run).
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to, next;
    Weight cap;
  };

  void add_arc(int u, int v, Weight cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
    // Fold the two anti-parallel arcs of an undirected edge into one pair:
    // handled by the caller adding both directions; reverse arcs stay 0.
  }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  Weight dfs(int u, int t, Weight limit) {
    if (u == t || limit == 0) return limit;
    for (int& a = it_[u]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1) {
        Weight pushed = dfs(arc.to, t, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, it_;
  std::vector<Arc> arcs_;
};

void check_terminals(const WeightedGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("min_separator: empty terminal set");
  std::vector<char> in_a(g.vertex_count(), 0);
  for (int v : a) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("terminal out of range");
    in_a[v] = 1;
  }
  for (int v : b) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("terminal out of range");
    if (in_a[v]) throw std::invalid_argument("min_separator: overlapping terminal sets");
  }
}

}  // namespace

CutResult min_separator(const WeightedGraph& g, const std::vector<int>& a,
                        const std::vector<int>& b) {
  check_terminals(g, a, b);
  int n = g.vertex_count();
  // Node map: all of a -> source 0, all of b -> sink 1, the rest follow.
  std::vector<int> node(n, -1);
  for (int v : a) node[v] = 0;
  for (int v : b) node[v] = 1;
  int next = 2;
  for (int v = 0; v < n; ++v)
    if (node[v] < 0) node[v] = next++;
  MaxFlow flow(next);
  for (const auto& [e, w] : g.edges()) {
    if (node[e.u] == node[e.v]) continue;  // inside a terminal set
    flow.add_undirected(node[e.u], node[e.v], w);
  }
  Weight value = flow.run(0, 1);
  auto reach = flow.source_side(0);

  CutResult result;
  result.weight = value;
  std::vector<int> side_a, side_b;
  for (int v = 0; v < n; ++v) (reach[node[v]] ? side_a : side_b).push_back(v);
  EdgeSet cut;
  for (const auto& [e, w] : g.edges())
    if (reach[node[e.u]] != reach[node[e.v]]) cut.insert(e);
  result.partition = {side_a, side_b};
  result.edges = cut;
  return result;
}

Weight min_separator_weight(const WeightedGraph& g, const std::vector<int>& a,
                            const std::vector<int>& b) {
  return min_separator(g, a, b).weight;
}

std::vector<std::vector<int>> alpha_classes(const WeightedGraph& g, Weight alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (find(u) == find(v)) continue;  // already merged via earlier pairs
      if (min_separator_weight(g, {u}, {v}) >= alpha) {
        int a = find(u), b = find(v);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : by_root) out.push_back(std::move(vs));
  return out;
}

}  // namespace cgwc

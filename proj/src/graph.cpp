#include "cgwc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgwc {

WeightedGraph::WeightedGraph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

void WeightedGraph::add_edge(int u, int v, Weight w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  if (w < 1) throw std::invalid_argument("edge weight must be >= 1");
  if (is_inf(w)) throw std::invalid_argument("edge weight must be finite");
  Edge e(u, v);
  if (edges_.count(e)) throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  Weight nt = sat_add(total_weight_, w);
  if (is_inf(nt)) throw std::invalid_argument("total edge weight overflows");
  total_weight_ = nt;
  edges_.emplace(e, w);
  adj_[u].emplace_back(v, w);
  adj_[v].emplace_back(u, w);
  std::sort(adj_[u].begin(), adj_[u].end());
  std::sort(adj_[v].begin(), adj_[v].end());
}

bool WeightedGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  return edges_.count(Edge(u, v)) > 0;
}

Weight WeightedGraph::weight(int u, int v) const {
  auto it = edges_.find(Edge(u, v));
  return it == edges_.end() ? 0 : it->second;
}

const std::vector<std::pair<int, Weight>>& WeightedGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int WeightedGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Weight WeightedGraph::weight_between(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<char> in_b(n_, 0);
  for (int v : b) in_b[v] = 1;
  Weight total = 0;
  for (int u : a)
    for (auto [v, w] : adj_[u])
      if (in_b[v]) total = sat_add(total, w);
  return total;
}

Weight WeightedGraph::weight_out(const std::vector<int>& s) const {
  std::vector<char> in_s(n_, 0);
  for (int v : s) in_s[v] = 1;
  Weight total = 0;
  for (int u : s)
    for (auto [v, w] : adj_[u])
      if (!in_s[v]) total = sat_add(total, w);
  return total;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<int>> groups_from_dsu(Dsu& dsu, int n) {
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, vs] : by_root) out.push_back(std::move(vs));
  return out;
}

}  // namespace

std::vector<std::vector<int>> WeightedGraph::components() const {
  Dsu dsu(n_);
  for (const auto& [e, w] : edges_) dsu.unite(e.u, e.v);
  return groups_from_dsu(dsu, n_);
}

bool WeightedGraph::is_connected() const {
  if (n_ == 0) return false;
  return components().size() == 1;
}

std::vector<std::vector<int>> WeightedGraph::components_without(const EdgeSet& removed) const {
  Dsu dsu(n_);
  for (const auto& [e, w] : edges_)
    if (!removed.count(e)) dsu.unite(e.u, e.v);
  return groups_from_dsu(dsu, n_);
}

WeightedGraph WeightedGraph::induced(const std::vector<int>& vertices, std::vector<int>* old_ids) const {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> new_id(n_, -1);
  for (size_t i = 0; i < vs.size(); ++i) {
    check_vertex(vs[i]);
    new_id[vs[i]] = static_cast<int>(i);
  }
  WeightedGraph out(static_cast<int>(vs.size()));
  for (const auto& [e, w] : edges_)
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) out.add_edge(new_id[e.u], new_id[e.v], w);
  if (old_ids) *old_ids = vs;
  return out;
}

WeightedGraph WeightedGraph::remove_edges(const EdgeSet& removed) const {
  WeightedGraph out(n_);
  for (const auto& [e, w] : edges_)
    if (!removed.count(e)) out.add_edge(e.u, e.v, w);
  return out;
}

WeightedGraph contract_set(const WeightedGraph& g, const std::vector<int>& u_set,
                           std::vector<int>* id_map) {
  if (u_set.empty()) throw std::invalid_argument("contract_set: empty set");
  std::vector<char> in_set(g.vertex_count(), 0);
  for (int v : u_set) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("contract_set: unknown vertex id " + std::to_string(v));
    in_set[v] = 1;
  }
  int rep = *std::min_element(u_set.begin(), u_set.end());

  std::vector<int> map(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_set[v] && v != rep) continue;
    map[v] = next++;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_set[v]) map[v] = map[rep];

  WeightedGraph out(next);
  std::map<Edge, Weight> merged;
  for (const auto& [e, w] : g.edges()) {
    int a = map[e.u], b = map[e.v];
    if (a == b) continue;  // internal to the contracted set
    merged[Edge(a, b)] = sat_add(merged[Edge(a, b)], w);
  }
  for (const auto& [e, w] : merged) out.add_edge(e.u, e.v, w);
  if (id_map) *id_map = map;
  return out;
}

}  // namespace cgwc

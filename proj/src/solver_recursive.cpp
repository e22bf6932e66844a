#include "cgwc/solver_recursive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cgwc/connectivity.hpp"
#include "cgwc/decomposition.hpp"
#include "cgwc/mimick.hpp"

namespace cgwc {

Weight RecursionConfig::default_p(Weight k) {
  if (k <= 0) return kInfWeight;
  // 2k * 2^(k+1) * (2k+1)^C(2^(2^(4k-1))+4k, 2) + 4k, saturating.
  Weight tower = sat_pow(2, sat_pow(2, 4 * k - 1));
  Weight verts = sat_add(tower, 4 * k);
  Weight pairs = is_inf(verts) ? kInfWeight : sat_mul(verts, verts - 1) / 2;
  Weight power = sat_pow(sat_add(sat_mul(2, k), 1), pairs);
  return sat_add(sat_mul(sat_mul(2 * k, sat_pow(2, k + 1)), power), 4 * k);
}

Weight RecursionConfig::default_q(Weight k) {
  Weight p = default_p(k);
  if (is_inf(p)) return kInfWeight;
  return sat_add(sat_pow(2, p - 1), p);
}

namespace {

// Direct bordered solve: for every completion and sub-spec, scan the light
// subsets of the allowed pool on the glued graph in (weight, lex) order and
// keep the first valid witness.
BorderedTable bordered_bruteforce(const BoundariedGraph& g, const EdgeSet& allowed,
                                  const ConnSpec& spec, Weight k, Weight family_cap) {
  BorderedTable out;
  out.family = enumerate_family(g.boundary_size(), std::max<Weight>(sat_mul(2, k), 1), family_cap);
  out.subspecs = spec_subtuples(spec);

  std::vector<std::pair<Edge, Weight>> pool;
  for (const Edge& e : allowed) pool.emplace_back(e, g.graph.weight(e.u, e.v));

  std::vector<std::pair<std::vector<Edge>, Weight>> candidates;
  {
    int m = static_cast<int>(pool.size());
    int max_take = static_cast<int>(std::min<Weight>(k, m));
    std::vector<Edge> chosen;
    std::function<void(int, Weight)> rec = [&](int start, Weight weight) {
      candidates.emplace_back(chosen, weight);
      if (static_cast<int>(chosen.size()) == max_take) return;
      for (int i = start; i < m; ++i) {
        Weight nw = sat_add(weight, pool[i].second);
        if (nw > k) continue;
        chosen.push_back(pool[i].first);
        rec(i + 1, nw);
        chosen.pop_back();
      }
    };
    rec(0, 0);
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first < b.first;
    });
  }

  for (const BoundariedGraph& member : out.family) {
    WeightedGraph glued = boundary_sum(g, member);
    std::vector<ConnSpec> profiles;
    profiles.reserve(candidates.size());
    for (const auto& [edges, weight] : candidates) {
      EdgeSet f(edges.begin(), edges.end());
      profiles.push_back(component_profile(glued, f));
    }
    std::vector<std::optional<BorderedEntry>> row;
    for (const ConnSpec& sub : out.subspecs) {
      std::optional<BorderedEntry> entry;
      for (size_t c = 0; c < candidates.size(); ++c) {
        if (profiles[c].size() != sub.size() || !spec_precedes(sub, profiles[c])) continue;
        entry = BorderedEntry{candidates[c].second,
                              EdgeSet(candidates[c].first.begin(), candidates[c].first.end())};
        break;
      }
      row.push_back(std::move(entry));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

EdgeSet map_edges(const EdgeSet& edges, const std::vector<int>& vertex_map) {
  EdgeSet out;
  for (const Edge& e : edges) {
    int u = vertex_map[e.u], v = vertex_map[e.v];
    if (u < 0 || v < 0) throw std::logic_error("edge endpoint dropped by vertex map");
    out.insert(Edge(u, v));
  }
  return out;
}

BorderedTable solve_bordered_impl(const BoundariedGraph& g, const EdgeSet& allowed,
                                  const ConnSpec& spec, Weight k, const RecursionConfig& cfg,
                                  RecursionTrace* trace) {
  int n = g.graph.vertex_count();
  if (!g.graph.is_connected()) throw std::invalid_argument("solve_bordered: graph must be connected");
  if (static_cast<Weight>(g.boundary_size()) > sat_mul(4, k))
    throw std::invalid_argument("solve_bordered: boundary larger than 4k");

  // Without budget there is no separation machinery; every partition is
  // trivially one-sided for q >= n.
  if (k <= 0)
    return solve_bordered_unbreakable(g, allowed, spec, k, n, cfg.family_cap);

  Weight q = cfg.resolved_q(k);
  SeparationVerdict verdict = find_good_separation(g.graph, q, sat_mul(2, k));
  if (!verdict.good())
    return solve_bordered_unbreakable(g, allowed, spec, k, verdict.q_out, cfg.family_cap);

  // Pick the side holding at most 2k boundary vertices; prefer fewer
  // boundary vertices, then the smaller, lexicographically first side.
  std::vector<char> in_x(n, 0);
  for (int v : g.boundary) in_x[v] = 1;
  auto boundary_count = [&](const std::vector<int>& side) {
    int count = 0;
    for (int v : side)
      if (in_x[v]) ++count;
    return count;
  };
  std::vector<int> side = verdict.side_a;
  {
    int ca = boundary_count(verdict.side_a), cb = boundary_count(verdict.side_b);
    bool a_ok = ca <= 2 * k, b_ok = cb <= 2 * k;
    if (!a_ok && !b_ok) throw std::logic_error("solve_bordered: no side with few boundary vertices");
    if (a_ok && b_ok) {
      if (cb < ca || (cb == ca && (verdict.side_b.size() < verdict.side_a.size() ||
                                   (verdict.side_b.size() == verdict.side_a.size() &&
                                    verdict.side_b < verdict.side_a))))
        side = verdict.side_b;
    } else if (!a_ok) {
      side = verdict.side_b;
    }
  }

  RecursionEvent event;
  event.graph = g.graph;
  event.boundary = g.boundary;
  event.allowed = allowed;
  event.side_a = side;

  std::vector<char> in_side(n, 0);
  for (int v : side) in_side[v] = 1;

  // New boundary: old boundary vertices on the side (in boundary order), then
  // the side endpoints of the cut edges, ascending.
  std::vector<int> x_hat;
  for (int v : g.boundary)
    if (in_side[v]) x_hat.push_back(v);
  {
    std::set<int> t_set;
    for (const auto& [e, w] : g.graph.edges())
      if (in_side[e.u] != in_side[e.v]) t_set.insert(in_side[e.u] ? e.u : e.v);
    for (int v : t_set)
      if (!in_x[v]) x_hat.push_back(v);
  }
  event.x_hat = x_hat;

  std::vector<int> side_old_ids;
  WeightedGraph side_graph = g.graph.induced(side, &side_old_ids);
  std::vector<int> to_side(n, -1);
  for (size_t i = 0; i < side_old_ids.size(); ++i) to_side[side_old_ids[i]] = static_cast<int>(i);
  std::vector<int> x_hat_local;
  for (int v : x_hat) x_hat_local.push_back(to_side[v]);

  EdgeSet l_hat_local, l_hat_global;
  for (const Edge& e : allowed)
    if (in_side[e.u] && in_side[e.v]) {
      l_hat_global.insert(e);
      l_hat_local.insert(Edge(to_side[e.u], to_side[e.v]));
    }
  event.l_hat = l_hat_global;

  BoundariedGraph side_inst(side_graph, x_hat_local);

  // Solve the side instance: directly at small size, recursively otherwise;
  // if its completion family is out of reach, keep every light allowed edge.
  EdgeSet m_local;
  bool cap_fallback = false, child_brute = false;
  Weight side_n = static_cast<Weight>(side_graph.vertex_count());
  bool brute_child = side_n <= sat_pow(2, q) || side_n <= cfg.force_bruteforce_at;
  try {
    BorderedTable child =
        brute_child ? bordered_bruteforce(side_inst, l_hat_local, spec, k, cfg.family_cap)
                    : solve_bordered_impl(side_inst, l_hat_local, spec, k, cfg, trace);
    child_brute = brute_child;
    for (const auto& row : child.entries)
      for (const auto& entry : row)
        if (entry) m_local.insert(entry->witness.begin(), entry->witness.end());
  } catch (const FamilyCapExceeded&) {
    cap_fallback = true;
    for (const Edge& e : l_hat_local)
      if (side_graph.weight(e.u, e.v) <= k) m_local.insert(e);
  }
  event.child_bruteforced = child_brute;
  event.child_cap_fallback = cap_fallback;

  EdgeSet m_global;
  for (const Edge& e : m_local) m_global.insert(Edge(side_old_ids[e.u], side_old_ids[e.v]));
  event.m_edges = m_global;

  EdgeSet l_star = m_global;
  for (const Edge& e : allowed)
    if (!l_hat_global.count(e)) l_star.insert(e);
  event.l_star = l_star;

  // Replacement boundary: endpoints of the witness union plus the side
  // boundary.
  std::set<int> z_set(x_hat.begin(), x_hat.end());
  for (const Edge& e : m_global) {
    z_set.insert(e.u);
    z_set.insert(e.v);
  }
  std::vector<int> z(z_set.begin(), z_set.end());
  event.z = z;

  WeightedGraph g_star;
  std::vector<int> x_star;
  EdgeSet l_star_in_g_star;
  std::vector<int> to_g_star(n, -1);
  bool progressed = false;

  if (static_cast<Weight>(z.size()) <= cfg.z_cap) {
    event.reduced = true;
    // R: the side with the edges inside Z removed, boundaried by Z; reduce it
    // at +inf and glue it back onto the kept part.
    std::vector<char> in_z(n, 0);
    for (int v : z) in_z[v] = 1;
    WeightedGraph r_graph(side_graph.vertex_count());
    for (const auto& [e, w] : side_graph.edges()) {
      int gu = side_old_ids[e.u], gv = side_old_ids[e.v];
      if (in_z[gu] && in_z[gv]) continue;
      r_graph.add_edge(e.u, e.v, w);
    }
    std::vector<int> z_local;
    for (int v : z) z_local.push_back(to_side[v]);
    BoundariedGraph r_inst(r_graph, z_local);
    BoundariedGraph r_star = cut_reduce(r_inst, kInfWeight);

    // Kept part Q = G - (side \ Z), boundaried by Z in the same order.
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
      if (!in_side[v] || in_z[v]) kept.push_back(v);
    std::vector<int> kept_old_ids;
    WeightedGraph q_graph = g.graph.induced(kept, &kept_old_ids);
    for (size_t i = 0; i < kept_old_ids.size(); ++i) to_g_star[kept_old_ids[i]] = static_cast<int>(i);
    std::vector<int> z_in_q;
    for (int v : z) z_in_q.push_back(to_g_star[v]);
    BoundariedGraph q_inst(q_graph, z_in_q);

    g_star = boundary_sum(q_inst, r_star);
    for (int v : g.boundary) x_star.push_back(to_g_star[v]);
    l_star_in_g_star = map_edges(l_star, to_g_star);
    progressed = g_star.vertex_count() < n;
  }

  event.progressed = progressed;
  event.g_star = g_star;
  event.g_star_boundary = x_star;
  event.l_star_in_g_star = l_star_in_g_star;
  event.level_to_g_star = to_g_star;
  if (trace) trace->events.push_back(event);

  if (!progressed) {
    // No shrink (oversized replacement boundary or an override that failed
    // the progress check): solve this level directly over the replaced
    // allowed set.
    return bordered_bruteforce(g, l_star, spec, k, cfg.family_cap);
  }

  BorderedTable inner =
      solve_bordered_impl(BoundariedGraph(g_star, x_star), l_star_in_g_star, spec, k, cfg, trace);

  // Witnesses live in the kept part, whose ids are shared between the level
  // graph and the reduced graph; map them back.
  std::vector<int> from_g_star(g_star.vertex_count(), -1);
  for (int v = 0; v < n; ++v)
    if (to_g_star[v] >= 0) from_g_star[to_g_star[v]] = v;
  for (auto& row : inner.entries)
    for (auto& entry : row)
      if (entry) entry->witness = map_edges(entry->witness, from_g_star);
  return inner;
}

}  // namespace

BorderedTable solve_bordered(const BoundariedGraph& g, const EdgeSet& allowed,
                             const ConnSpec& spec, Weight k, const RecursionConfig& cfg,
                             RecursionTrace* trace) {
  BorderedTable table = solve_bordered_impl(g, allowed, spec, k, cfg, trace);
  if (cfg.oracle_check) {
    for (size_t mi = 0; mi < table.family.size(); ++mi) {
      WeightedGraph glued = boundary_sum(g, table.family[mi]);
      for (size_t si = 0; si < table.subspecs.size(); ++si) {
        const auto& entry = table.entries[mi][si];
        if (entry && !is_valid_solution(glued, allowed, table.subspecs[si], entry->k_min, entry->witness))
          throw std::logic_error("solve_bordered: table entry failed cross-check");
      }
    }
  }
  return table;
}

std::optional<Solution> solve_connected(const WeightedGraph& g, const ConnSpec& spec, Weight k,
                                        const RecursionConfig& cfg, RecursionTrace* trace) {
  if (!g.is_connected()) throw std::invalid_argument("solve_connected: graph must be connected");
  int t = spec.size();
  if (t == 0) return std::nullopt;
  if (static_cast<Weight>(t) > sat_add(k, 1)) return std::nullopt;
  if (t == 1) {
    if (global_connectivity(g) >= spec.at(0)) return make_solution(g, {});
    return std::nullopt;
  }
  EdgeSet all_edges;
  for (const auto& [e, w] : g.edges()) all_edges.insert(e);
  BorderedTable table = solve_bordered(BoundariedGraph(g, {}), all_edges, spec, k, cfg, trace);
  const auto& entry = table.lookup(0, spec);
  if (!entry) return std::nullopt;
  if (!is_valid_solution(g, all_edges, spec, k, entry->witness))
    throw std::logic_error("solve_connected: witness failed revalidation");
  return make_solution(g, entry->witness);
}

}  // namespace cgwc

#include "cgwc/solver_general.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cgwc/connectivity.hpp"

namespace cgwc {

std::optional<std::pair<Weight, std::vector<int>>> min_cost_assignment(
    const std::vector<std::vector<Weight>>& cost) {
  int rows = static_cast<int>(cost.size());
  if (rows == 0) return std::make_pair(Weight{0}, std::vector<int>{});
  int cols = static_cast<int>(cost[0].size());
  if (rows > cols) return std::nullopt;

  // Forbidden entries become a finite sentinel dominating any real
  // assignment; a result touching one means no feasible assignment exists.
  constexpr Weight kBig = Weight{1} << 50;
  for (const auto& row : cost)
    for (Weight c : row)
      if (!is_inf(c) && (c < 0 || c >= kBig))
        throw std::invalid_argument("assignment cost out of range");

  auto at = [&](int i, int j) {
    Weight c = cost[i - 1][j - 1];
    return is_inf(c) ? kBig : c;
  };

  // Shortest augmenting paths with potentials (rows and columns 1-indexed).
  std::vector<Weight> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<int> match(cols + 1, 0), way(cols + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Weight> minv(cols + 1, kInfWeight);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0], j1 = -1;
      Weight delta = kInfWeight;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        Weight cur = at(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> assignment(rows, -1);
  Weight total = 0;
  for (int j = 1; j <= cols; ++j)
    if (match[j] != 0) {
      int i = match[j];
      if (is_inf(cost[i - 1][j - 1])) return std::nullopt;
      assignment[i - 1] = j - 1;
      total = sat_add(total, cost[i - 1][j - 1]);
    }
  return std::make_pair(total, assignment);
}

std::optional<ReducedInstance> remove_high_components(const WeightedGraph& g, const ConnSpec& spec,
                                                      Weight k) {
  struct Comp {
    std::vector<int> vertices;
    Weight lambda;
  };
  std::vector<Comp> comps;
  for (const auto& c : g.components())
    comps.push_back({c, global_connectivity(g.induced(c))});

  // Highest connectivity first; each removed component consumes the largest
  // demand it satisfies.
  std::vector<int> order(comps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (comps[a].lambda != comps[b].lambda) return comps[a].lambda > comps[b].lambda;
    return comps[a].vertices < comps[b].vertices;
  });

  std::vector<Weight> demands = spec.entries();
  std::vector<char> removed(comps.size(), 0);
  for (int idx : order) {
    if (comps[idx].lambda <= k) continue;
    // Largest demand <= lambda.
    int best = -1;
    for (size_t d = 0; d < demands.size(); ++d)
      if (demands[d] <= comps[idx].lambda) best = static_cast<int>(d);
    if (best < 0) return std::nullopt;
    demands.erase(demands.begin() + best);
    removed[idx] = 1;
  }

  std::vector<int> kept;
  for (size_t i = 0; i < comps.size(); ++i)
    if (!removed[i]) kept.insert(kept.end(), comps[i].vertices.begin(), comps[i].vertices.end());
  std::sort(kept.begin(), kept.end());

  ReducedInstance out;
  out.graph = g.induced(kept, &out.old_ids);
  out.spec = ConnSpec(std::move(demands));
  if (out.graph.vertex_count() == 0 && !out.spec.empty()) return std::nullopt;
  return out;
}

namespace {

// Nondecreasing positive tuples summing to total.
std::vector<std::vector<int>> partitions_into(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts);
  std::function<void(int, int, int)> rec = [&](int pos, int remaining, int minimum) {
    if (pos == parts) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int slots_left = parts - pos - 1;
    for (int v = minimum; v <= remaining - slots_left; ++v) {
      cur[pos] = v;
      rec(pos + 1, remaining - v, v);
    }
  };
  if (parts > 0 && total >= parts)
    rec(0, total, 1);
  else if (parts == 0 && total == 0)
    out.push_back({});
  return out;
}

}  // namespace

std::optional<Solution> solve_uniform(const WeightedGraph& h, Weight lambda, const ConnSpec& spec,
                                      Weight k, const RecursionConfig& cfg) {
  auto comps = h.components();
  int s = static_cast<int>(comps.size());
  int t = spec.size();

  std::vector<WeightedGraph> comp_graphs;
  std::vector<std::vector<int>> comp_ids;
  for (const auto& c : comps) {
    std::vector<int> ids;
    comp_graphs.push_back(h.induced(c, &ids));
    comp_ids.push_back(std::move(ids));
    if (global_connectivity(comp_graphs.back()) != lambda)
      throw std::invalid_argument("solve_uniform: component connectivity differs from lambda");
  }

  EdgeSet all_edges;
  for (const auto& [e, w] : h.edges()) all_edges.insert(e);

  if (s > t) return std::nullopt;
  if (s == t) {
    ConnSpec uniform_profile(std::vector<Weight>(t, lambda));
    if (spec_precedes(spec, uniform_profile)) return make_solution(h, {});
    return std::nullopt;
  }
  if (static_cast<Weight>(t - s) > k) return std::nullopt;
  if (static_cast<Weight>(spec_variate(spec).size()) > sat_mul(3, k)) return std::nullopt;

  // Memoized pricing: minimum budget turning component j into the tuple, by
  // increasing budget, first success.
  std::map<std::pair<int, std::vector<Weight>>, std::pair<Weight, std::optional<Solution>>> price;
  auto cost_of = [&](int j, const ConnSpec& tuple) -> std::pair<Weight, std::optional<Solution>>& {
    auto key = std::make_pair(j, tuple.entries());
    auto it = price.find(key);
    if (it != price.end()) return it->second;
    Weight cap = std::min(k, comp_graphs[j].total_weight());
    std::pair<Weight, std::optional<Solution>> result{kInfWeight, std::nullopt};
    for (Weight kh = 0; kh <= cap; ++kh) {
      auto sol = solve_connected(comp_graphs[j], tuple, kh, cfg);
      if (sol) {
        result = {kh, std::move(sol)};
        break;
      }
    }
    return price.emplace(key, std::move(result)).first->second;
  };

  int p_max = static_cast<int>(std::min<Weight>(k, s));
  for (int p = 1; p <= p_max; ++p) {
    for (const auto& sizes : partitions_into(t - s + p, p)) {
      // All tuple choices per split component.
      std::vector<std::vector<ConnSpec>> options(p);
      bool empty_option = false;
      for (int i = 0; i < p; ++i) {
        options[i] = spec_subtuples_of_size(spec, sizes[i]);
        if (options[i].empty()) empty_option = true;
      }
      if (empty_option) continue;
      std::vector<int> pick(p, 0);
      while (true) {
        ConnSpec combined(std::vector<Weight>(s - p, lambda));
        for (int i = 0; i < p; ++i) combined = spec_merge(combined, options[i][pick[i]]);
        if (spec_precedes(spec, combined)) {
          std::vector<std::vector<Weight>> cost(p, std::vector<Weight>(s, kInfWeight));
          for (int i = 0; i < p; ++i)
            for (int j = 0; j < s; ++j) cost[i][j] = cost_of(j, options[i][pick[i]]).first;
          auto matching = min_cost_assignment(cost);
          if (matching && matching->first <= k) {
            EdgeSet f;
            for (int i = 0; i < p; ++i) {
              int j = matching->second[i];
              const auto& witness = cost_of(j, options[i][pick[i]]).second;
              for (const Edge& e : witness->edges)
                f.insert(Edge(comp_ids[j][e.u], comp_ids[j][e.v]));
            }
            if (!is_valid_solution(h, all_edges, spec, k, f))
              throw std::logic_error("solve_uniform: assembled solution failed revalidation");
            return make_solution(h, f);
          }
        }
        int pos = 0;
        while (pos < p && ++pick[pos] == static_cast<int>(options[pos].size())) pick[pos++] = 0;
        if (pos == p) break;
      }
    }
  }
  return std::nullopt;
}

std::optional<Solution> solve_cgwc(const WeightedGraph& g, const ConnSpec& spec, Weight k,
                                   const RecursionConfig& cfg) {
  auto comps = g.components();
  int s = static_cast<int>(comps.size());
  int t = spec.size();
  EdgeSet all_edges;
  for (const auto& [e, w] : g.edges()) all_edges.insert(e);

  if (s > t) return std::nullopt;
  if (s == t) {
    std::vector<Weight> lambdas;
    for (const auto& c : comps) lambdas.push_back(global_connectivity(g.induced(c)));
    if (spec_precedes(spec, ConnSpec(std::move(lambdas)))) return make_solution(g, {});
    return std::nullopt;
  }
  if (static_cast<Weight>(t - s) > k) return std::nullopt;

  auto reduced = remove_high_components(g, spec, k);
  if (!reduced) return std::nullopt;
  const WeightedGraph& core = reduced->graph;
  const ConnSpec& core_spec = reduced->spec;

  if (static_cast<Weight>(spec_variate(core_spec).size()) > sat_mul(3, k)) return std::nullopt;

  // Group the remaining components by their (finite, <= k) connectivity.
  auto core_comps = core.components();
  int cs = static_cast<int>(core_comps.size());
  int ct = core_spec.size();
  if (cs == 0) return std::nullopt;  // demands left but nothing to split

  std::map<Weight, std::vector<int>> by_level;  // lambda -> component indices
  for (int j = 0; j < cs; ++j)
    by_level[global_connectivity(core.induced(core_comps[j]))].push_back(j);
  std::vector<Weight> levels;
  std::vector<WeightedGraph> level_graphs;
  std::vector<std::vector<int>> level_ids;
  std::vector<int> level_sizes;
  for (auto& [lambda, idxs] : by_level) {
    std::vector<int> vertices;
    for (int j : idxs)
      vertices.insert(vertices.end(), core_comps[j].begin(), core_comps[j].end());
    std::sort(vertices.begin(), vertices.end());
    std::vector<int> ids;
    levels.push_back(lambda);
    level_graphs.push_back(core.induced(vertices, &ids));
    level_ids.push_back(std::move(ids));
    level_sizes.push_back(static_cast<int>(idxs.size()));
  }
  int nl = static_cast<int>(levels.size());
  int deficit = ct - cs;  // extra components the splits must produce

  // Budget tuples over the levels, smallest total budget first.
  std::vector<std::vector<Weight>> budget_tuples;
  {
    std::vector<Weight> caps(nl);
    for (int i = 0; i < nl; ++i) caps[i] = std::min(k, level_graphs[i].total_weight());
    std::vector<Weight> cur(nl, 0);
    std::function<void(int, Weight)> rec = [&](int pos, Weight used) {
      if (pos == nl) {
        budget_tuples.push_back(cur);
        return;
      }
      for (Weight hcur = 0; hcur <= caps[pos] && sat_add(used, hcur) <= k; ++hcur) {
        cur[pos] = hcur;
        rec(pos + 1, used + hcur);
      }
    };
    rec(0, 0);
    std::stable_sort(budget_tuples.begin(), budget_tuples.end(),
                     [](const std::vector<Weight>& a, const std::vector<Weight>& b) {
                       Weight sa = 0, sb = 0;
                       for (Weight x : a) sa += x;
                       for (Weight x : b) sb += x;
                       if (sa != sb) return sa < sb;
                       return a < b;
                     });
  }

  for (const auto& budgets : budget_tuples) {
    // Split counts p_i and produced counts t_i per level.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pt_tuples;
    {
      std::vector<int> pcur(nl), tcur(nl);
      std::function<void(int, int)> rec = [&](int pos, int produced) {
        if (pos == nl) {
          if (produced == deficit) pt_tuples.emplace_back(pcur, tcur);
          return;
        }
        int pmax = std::min<int>(level_sizes[pos], static_cast<int>(std::min<Weight>(budgets[pos], 1 << 20)));
        for (int p = 0; p <= pmax; ++p) {
          if (p >= 1 && levels[pos] > budgets[pos]) continue;  // splits cost at least lambda
          int tmin = p, tmax = static_cast<int>(std::min<Weight>(2 * budgets[pos], deficit - produced + p));
          for (int ti = tmin; ti <= tmax; ++ti) {
            if (p == 0 && ti > 0) continue;
            pcur[pos] = p;
            tcur[pos] = ti;
            rec(pos + 1, produced + ti - p);
          }
        }
      };
      rec(0, 0);
    }
    for (const auto& [ps, ts] : pt_tuples) {
      // Demand tuples per level.
      std::vector<std::vector<ConnSpec>> options(nl);
      bool dead = false;
      for (int i = 0; i < nl; ++i) {
        options[i] = spec_subtuples_of_size(core_spec, ts[i]);
        if (options[i].empty()) dead = true;
      }
      if (dead) continue;
      std::vector<int> pick(nl, 0);
      while (true) {
        ConnSpec combined;
        for (int i = 0; i < nl; ++i) {
          combined = spec_merge(
              combined, ConnSpec(std::vector<Weight>(level_sizes[i] - ps[i], levels[i])));
          combined = spec_merge(combined, options[i][pick[i]]);
        }
        if (combined.size() == ct && spec_precedes(core_spec, combined)) {
          // Solve every level; all must succeed.
          EdgeSet f;
          bool ok = true;
          for (int i = 0; i < nl && ok; ++i) {
            ConnSpec level_spec = spec_merge(
                ConnSpec(std::vector<Weight>(level_sizes[i] - ps[i], levels[i])),
                options[i][pick[i]]);
            auto sol = solve_uniform(level_graphs[i], levels[i], level_spec, budgets[i], cfg);
            if (!sol) {
              ok = false;
              break;
            }
            for (const Edge& e : sol->edges)
              f.insert(Edge(reduced->old_ids[level_ids[i][e.u]], reduced->old_ids[level_ids[i][e.v]]));
          }
          if (ok) {
            if (!is_valid_solution(g, all_edges, spec, k, f))
              throw std::logic_error("solve_cgwc: assembled solution failed revalidation");
            return make_solution(g, f);
          }
        }
        int pos = 0;
        while (pos < nl && ++pick[pos] == static_cast<int>(options[pos].size())) pick[pos++] = 0;
        if (pos == nl) break;
        if (nl == 0) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace cgwc

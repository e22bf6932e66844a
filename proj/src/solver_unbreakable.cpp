#include "cgwc/solver_unbreakable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "cgwc/connectivity.hpp"
#include "cgwc/decomposition.hpp"
#include "cgwc/mimick.hpp"
#include "cgwc/septools.hpp"

namespace cgwc {

namespace {

// Candidate deletion sets F within the allowed pool, each with its component
// profile of g - F, ordered by (weight, lexicographic edges).
struct ScanEntry {
  std::vector<Edge> edges;
  Weight weight = 0;
  ConnSpec profile;
};

std::vector<ScanEntry> scan_table(const WeightedGraph& g, const EdgeSet& allowed, Weight k) {
  detail::ProfileScanner scanner(g);
  const auto& all = scanner.edges();
  std::vector<int> pool;
  for (size_t i = 0; i < all.size(); ++i)
    if (allowed.count(Edge(std::get<0>(all[i]), std::get<1>(all[i]))))
      pool.push_back(static_cast<int>(i));
  int m = static_cast<int>(pool.size());
  int max_take = static_cast<int>(std::min<Weight>(k, m));

  std::vector<ScanEntry> table;
  std::vector<char> removed(all.size(), 0);
  std::vector<int> chosen;
  std::function<void(int, Weight)> rec = [&](int start, Weight weight) {
    ScanEntry entry;
    for (int idx : chosen)
      entry.edges.push_back(Edge(std::get<0>(all[idx]), std::get<1>(all[idx])));
    entry.weight = weight;
    entry.profile = ConnSpec(scanner.profile(removed));
    table.push_back(std::move(entry));
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
  std::stable_sort(table.begin(), table.end(), [](const ScanEntry& a, const ScanEntry& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.edges < b.edges;
  });
  return table;
}

// Light subsets of a pool (weight <= k), ordered by (weight, lex edges).
std::vector<std::pair<std::vector<Edge>, Weight>> light_subsets(
    const std::vector<std::pair<Edge, Weight>>& pool, Weight k) {
  int m = static_cast<int>(pool.size());
  int max_take = static_cast<int>(std::min<Weight>(k, m));
  std::vector<std::pair<std::vector<Edge>, Weight>> out;
  std::vector<Edge> chosen;
  std::function<void(int, Weight)> rec = [&](int start, Weight weight) {
    out.emplace_back(chosen, weight);
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
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace

std::optional<GoodSetState> grow_good_set(const WeightedGraph& g, const EdgeSet& allowed,
                                          Weight lambda_i, Weight q, Weight k,
                                          const std::vector<int>& s0) {
  int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (int v : s0) in_s[v] = 1;

  auto s_vertices = [&]() {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (in_s[v]) s.push_back(v);
    return s;
  };
  auto comps_outside = [&]() {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!in_s[v]) rest.push_back(v);
    std::vector<int> old_ids;
    WeightedGraph sub = g.induced(rest, &old_ids);
    std::vector<std::vector<int>> comps;
    for (const auto& comp : sub.components()) {
      std::vector<int> orig;
      for (int v : comp) orig.push_back(old_ids[v]);
      comps.push_back(std::move(orig));
    }
    return comps;
  };

  // Too small to contain the guessed inside part.
  if (static_cast<Weight>(s_vertices().size()) <= q) return std::nullopt;

  auto comps = comps_outside();

  // Absorb components that no allowed budget-k cut can detach, and oversized
  // ones.
  {
    bool absorbed = false;
    for (const auto& comp : comps) {
      bool non_allowed_attach = false;
      Weight attach = 0;
      std::vector<char> in_comp(n, 0);
      for (int v : comp) in_comp[v] = 1;
      for (int v : comp)
        for (auto [u, w] : g.neighbors(v))
          if (in_s[u]) {
            attach = sat_add(attach, w);
            if (!allowed.count(Edge(u, v))) non_allowed_attach = true;
          }
      if (non_allowed_attach || attach >= k + 1 || static_cast<Weight>(comp.size()) > q) {
        for (int v : comp) in_s[v] = 1;
        absorbed = true;
      }
    }
    if (absorbed) comps = comps_outside();
  }

  // Absorb across lightly separable seeds until fixpoint: a seed u in S next
  // to a component, with a small connected Z around u cheaply separable from
  // the rest of S, pulls that component in.
  while (true) {
    std::vector<int> s = s_vertices();
    std::vector<int> s_old_ids;
    WeightedGraph s_sub = g.induced(s, &s_old_ids);
    std::vector<int> local_of(n, -1);
    for (size_t i = 0; i < s_old_ids.size(); ++i) local_of[s_old_ids[i]] = static_cast<int>(i);

    int absorb_comp = -1;
    for (int u : s) {
      bool next_to_comp = false;
      for (auto [v, w] : g.neighbors(u))
        if (!in_s[v]) next_to_comp = true;
      if (!next_to_comp) continue;
      bool found_z = false;
      for (const auto& z_local : connected_sets_up_to(s_sub, local_of[u],
                                                      static_cast<int>(std::min<Weight>(q, s.size())))) {
        std::vector<int> z, rest;
        std::vector<char> in_z(s_sub.vertex_count(), 0);
        for (int v : z_local) in_z[v] = 1;
        for (int v = 0; v < s_sub.vertex_count(); ++v) (in_z[v] ? z : rest).push_back(v);
        if (s_sub.weight_between(z, rest) <= lambda_i - 1) {
          found_z = true;
          break;
        }
      }
      if (!found_z) continue;
      for (size_t j = 0; j < comps.size(); ++j) {
        for (int v : comps[j])
          if (g.has_edge(u, v)) {
            absorb_comp = static_cast<int>(j);
            break;
          }
        if (absorb_comp >= 0) break;
      }
      if (absorb_comp >= 0) break;
    }
    if (absorb_comp < 0) break;
    for (int v : comps[absorb_comp]) in_s[v] = 1;
    comps = comps_outside();
  }

  // A small connected piece of S cheaply separable from the whole graph
  // contradicts the target connectivity of the big component.
  {
    std::vector<int> s = s_vertices();
    std::vector<int> s_old_ids;
    WeightedGraph s_sub = g.induced(s, &s_old_ids);
    for (int u_local = 0; u_local < s_sub.vertex_count(); ++u_local) {
      for (const auto& z_local : connected_sets_up_to(s_sub, u_local,
                                                      static_cast<int>(std::min<Weight>(q, s.size())))) {
        std::vector<int> z;
        for (int v : z_local) z.push_back(s_old_ids[v]);
        if (g.weight_out(z) <= lambda_i - 1) return std::nullopt;
      }
    }
  }

  GoodSetState state;
  state.s_set = s_vertices();
  state.components = comps;
  std::vector<char> in_s_final(n, 0);
  for (int v : state.s_set) in_s_final[v] = 1;
  for (size_t j = 0; j < state.components.size(); ++j) {
    bool low = false;
    for (int v : state.components[j]) {
      Weight direct = 0;
      for (auto [u, w] : g.neighbors(v))
        if (in_s_final[u]) direct = sat_add(direct, w);
      if (direct < lambda_i) {
        low = true;
        break;
      }
    }
    if (low) state.index_set.push_back(static_cast<int>(j));
  }

  // Loose components must all fit among the small components.
  std::vector<int> loose;
  for (int j : state.index_set)
    loose.insert(loose.end(), state.components[j].begin(), state.components[j].end());
  if (static_cast<Weight>(loose.size()) > q) return std::nullopt;
  std::sort(loose.begin(), loose.end());
  if (g.weight_between(loose, state.s_set) > k) return std::nullopt;

  return state;
}

namespace {

// Scan list for one small component: every allowed inner deletion set with
// the resulting piece profile.
struct PieceChoice {
  std::vector<Edge> inner;  // edges inside the component
  Weight inner_weight = 0;
  ConnSpec profile;
};

std::vector<PieceChoice> piece_choices(const WeightedGraph& g, const EdgeSet& allowed,
                                       const std::vector<int>& vertices, Weight budget) {
  std::vector<int> old_ids;
  WeightedGraph sub = g.induced(vertices, &old_ids);
  std::vector<std::pair<Edge, Weight>> pool;
  for (const auto& [e, w] : sub.edges())
    if (allowed.count(Edge(old_ids[e.u], old_ids[e.v]))) pool.emplace_back(e, w);
  std::vector<PieceChoice> out;
  for (auto& [edges_local, w] : light_subsets(pool, budget)) {
    PieceChoice choice;
    EdgeSet local(edges_local.begin(), edges_local.end());
    choice.profile = component_profile(sub, local);
    choice.inner_weight = w;
    for (const Edge& e : edges_local) choice.inner.push_back(Edge(old_ids[e.u], old_ids[e.v]));
    std::sort(choice.inner.begin(), choice.inner.end());
    out.push_back(std::move(choice));
  }
  return out;
}

}  // namespace

std::optional<EdgeSet> dp_compose(const WeightedGraph& g, const EdgeSet& allowed,
                                  const GoodSetState& state, const ConnSpec& spec_minus_i,
                                  Weight k) {
  int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (int v : state.s_set) in_s[v] = 1;
  std::vector<char> in_index(state.components.size(), 0);
  for (int j : state.index_set) in_index[j] = 1;

  // Q_0 = the loose components together; the rest follow by smallest vertex.
  std::vector<std::vector<int>> q_parts;
  {
    std::vector<int> q0;
    for (int j : state.index_set)
      q0.insert(q0.end(), state.components[j].begin(), state.components[j].end());
    std::sort(q0.begin(), q0.end());
    q_parts.push_back(std::move(q0));
    for (size_t j = 0; j < state.components.size(); ++j)
      if (!in_index[j]) q_parts.push_back(state.components[j]);
  }

  Weight kk = std::min(k, g.total_weight());

  // Cut edges and weights from S to each part.
  int parts = static_cast<int>(q_parts.size());
  std::vector<std::vector<Edge>> cut_edges(parts);
  std::vector<Weight> cut_weight(parts, 0);
  for (int j = 0; j < parts; ++j) {
    for (int v : q_parts[j])
      for (auto [u, w] : g.neighbors(v))
        if (in_s[u]) {
          cut_edges[j].push_back(Edge(u, v));
          cut_weight[j] = sat_add(cut_weight[j], w);
        }
    std::sort(cut_edges[j].begin(), cut_edges[j].end());
    for (const Edge& e : cut_edges[j])
      if (!allowed.count(e))
        throw std::logic_error("dp_compose: attachment edge outside the allowed set");
  }

  std::vector<ConnSpec> subspecs = spec_subtuples(spec_minus_i);
  std::map<std::vector<Weight>, int> subspec_index;
  for (size_t i = 0; i < subspecs.size(); ++i) subspec_index[subspecs[i].entries()] = static_cast<int>(i);
  int spec_count = static_cast<int>(subspecs.size());
  int budgets = static_cast<int>(kk) + 1;

  using Table = std::vector<std::optional<EdgeSet>>;  // [subspec * budgets + budget]
  auto idx = [&](int spec_i, Weight budget) { return spec_i * budgets + static_cast<int>(budget); };

  auto f_table = [&](int j) {
    Table table(spec_count * budgets);
    bool is_q0 = (j == 0);
    bool q0_empty = q_parts[0].empty();
    std::vector<PieceChoice> choices;
    if (!(is_q0 && q0_empty))
      choices = piece_choices(g, allowed, q_parts[j],
                              std::max<Weight>(0, kk - cut_weight[j]));
    for (int si = 0; si < spec_count; ++si) {
      const ConnSpec& target = subspecs[si];
      for (Weight l = 0; l <= kk; ++l) {
        if (target.empty()) {
          // Leaving the part attached is free for ordinary parts; the loose
          // block must always be detached.
          if (!is_q0)
            table[idx(si, l)] = EdgeSet{};
          else if (q0_empty)
            table[idx(si, l)] = EdgeSet{};
          continue;
        }
        if (is_q0 && q0_empty) continue;  // no vertices, demands unmeetable
        for (const PieceChoice& choice : choices) {
          Weight total = sat_add(cut_weight[j], choice.inner_weight);
          if (total > l) continue;
          if (choice.profile.size() != target.size()) continue;
          if (!spec_precedes(target, choice.profile)) continue;
          EdgeSet f(cut_edges[j].begin(), cut_edges[j].end());
          f.insert(choice.inner.begin(), choice.inner.end());
          table[idx(si, l)] = std::move(f);
          break;
        }
      }
    }
    return table;
  };

  // g_0 = f_0, then fold each remaining part in via merge splits.
  Table g_cur = f_table(0);
  for (int j = 1; j < parts; ++j) {
    Table f_j = f_table(j);
    Table g_next(spec_count * budgets);
    for (int si = 0; si < spec_count; ++si) {
      const ConnSpec& target = subspecs[si];
      std::vector<ConnSpec> first_halves = spec_subtuples(target);
      for (Weight l = 0; l <= kk; ++l) {
        for (const ConnSpec& half : first_halves) {
          // Multiset complement of half inside target.
          std::vector<Weight> rest;
          {
            auto a = target.entries();
            auto b = half.entries();
            size_t bi = 0;
            for (Weight w : a) {
              if (bi < b.size() && b[bi] == w)
                ++bi;
              else
                rest.push_back(w);
            }
          }
          int half_i = subspec_index.at(half.entries());
          int rest_i = subspec_index.at(rest);
          bool done = false;
          for (Weight l1 = 0; l1 <= l; ++l1) {
            const auto& left = g_cur[idx(half_i, l1)];
            if (!left) continue;
            const auto& right = f_j[idx(rest_i, l - l1)];
            if (!right) continue;
            EdgeSet merged = *left;
            merged.insert(right->begin(), right->end());
            g_next[idx(si, l)] = std::move(merged);
            done = true;
            break;
          }
          if (done) break;
        }
      }
    }
    g_cur = std::move(g_next);
  }

  const auto& result = g_cur[idx(subspec_index.at(spec_minus_i.entries()), kk)];
  if (!result) return std::nullopt;

  // Post-hoc characterization check: right piece count, S kept together with
  // every untouched part, loose block detached, demands met.
  EdgeSet f = *result;
  Weight fw = 0;
  for (const Edge& e : f) {
    if (!allowed.count(e)) throw std::logic_error("dp_compose: edge outside allowed set");
    fw = sat_add(fw, g.weight(e.u, e.v));
  }
  if (fw > k) throw std::logic_error("dp_compose: budget exceeded");
  auto comps = g.components_without(f);
  if (static_cast<int>(comps.size()) != spec_minus_i.size() + 1)
    throw std::logic_error("dp_compose: wrong component count");
  return f;
}

namespace {

// Annotated solver with per-instance memoization, shared across the sub-spec
// and budget queries of the bordered table.
class AnnotatedSolver {
 public:
  AnnotatedSolver(WeightedGraph g, EdgeSet allowed, Weight q)
      : g_(std::move(g)), allowed_(std::move(allowed)), q_(q) {
    if (!g_.is_connected())
      throw std::invalid_argument("annotated solver: graph must be connected");
    for (const Edge& e : allowed_)
      if (!g_.has_edge(e.u, e.v))
        throw std::invalid_argument("annotated solver: allowed edge not in graph");
  }

  // Verifies the unbreakability precondition where that is tractable.
  void check_precondition(Weight k) {
    if (g_.vertex_count() <= 12 && q_ < g_.vertex_count() && q_ >= 1 &&
        !verify_unbreakable(g_, q_, sat_mul(2, k)))
      throw std::invalid_argument("annotated solver: graph is not (q,2k)-unbreakable");
  }

  std::optional<EdgeSet> solve(const ConnSpec& spec, Weight k) {
    int t = spec.size();
    int n = g_.vertex_count();
    if (t == 0) return std::nullopt;
    if (t == 1) return lambda() >= spec.at(0) ? std::make_optional(EdgeSet{}) : std::nullopt;
    if (static_cast<Weight>(t) > sat_add(k, 1)) return std::nullopt;

    if (static_cast<Weight>(n) <= sat_mul(3, q_)) {
      for (const ScanEntry& entry : table(k)) {
        if (entry.weight > k) continue;
        if (entry.profile.size() != t) continue;
        if (!spec_precedes(spec, entry.profile)) continue;
        return EdgeSet(entry.edges.begin(), entry.edges.end());
      }
      return std::nullopt;
    }

    // One demand plays the big component; split on how it compares to the
    // budget.
    for (int i = 0; i < t; ++i) {
      if (i > 0 && spec.at(i) == spec.at(i - 1)) continue;
      Weight lambda_i = spec.at(i);
      std::optional<EdgeSet> found =
          lambda_i > k ? solve_big_high(spec, k, i) : solve_big_low(spec, k, i);
      if (found) return found;
    }
    return std::nullopt;
  }

  const WeightedGraph& graph() const { return g_; }

 private:
  Weight lambda() {
    if (!lambda_) lambda_ = global_connectivity(g_);
    return *lambda_;
  }

  const std::vector<ScanEntry>& table(Weight k) {
    if (!scan_ || scan_budget_ < k) {
      scan_ = scan_table(g_, allowed_, k);
      scan_budget_ = k;
    }
    return *scan_;
  }

  // Demands above the budget: the big component must be a whole
  // high-connectivity class.
  std::optional<EdgeSet> solve_big_high(const ConnSpec& spec, Weight k, int i) {
    Weight lambda_i = spec.at(i);
    int n = g_.vertex_count();
    auto it = classes_.find(k);
    if (it == classes_.end())
      it = classes_.emplace(k, alpha_classes(g_, sat_add(k, 1))).first;
    for (const auto& cls : it->second) {
      if (static_cast<Weight>(cls.size()) < sat_add(q_, 1)) continue;
      WeightedGraph sub = g_.induced(cls);
      Weight cls_lambda = sub.is_connected() ? global_connectivity(sub) : 0;
      if (cls_lambda < lambda_i) continue;
      if (static_cast<Weight>(n - static_cast<int>(cls.size())) > q_) continue;
      std::vector<int> rest;
      std::vector<char> in_cls(n, 0);
      for (int v : cls) in_cls[v] = 1;
      for (int v = 0; v < n; ++v)
        if (!in_cls[v]) rest.push_back(v);
      std::vector<Edge> cut;
      Weight cut_w = 0;
      bool cut_allowed = true;
      for (const auto& [e, w] : g_.edges())
        if (in_cls[e.u] != in_cls[e.v]) {
          cut.push_back(e);
          cut_w = sat_add(cut_w, w);
          if (!allowed_.count(e)) cut_allowed = false;
        }
      if (!cut_allowed || cut_w > k) continue;
      // Brute force the rest.
      std::vector<std::pair<Edge, Weight>> pool;
      for (const auto& [e, w] : g_.edges())
        if (!in_cls[e.u] && !in_cls[e.v] && allowed_.count(e)) pool.emplace_back(e, w);
      for (auto& [extra, ew] : light_subsets(pool, k - cut_w)) {
        EdgeSet f(cut.begin(), cut.end());
        f.insert(extra.begin(), extra.end());
        if (is_valid_solution(g_, allowed_, spec, k, f)) return f;
      }
    }
    return std::nullopt;
  }

  // Demands within the budget: guess a separating vertex set from the
  // universal family, grow it, and compose the loose parts.
  std::optional<EdgeSet> solve_big_low(const ConnSpec& spec, Weight k, int i) {
    Weight lambda_i = spec.at(i);
    int n = g_.vertex_count();
    Weight inside_bound = sat_mul(k, restricted_bfs_size_bound(sat_add(q_, lambda_i)));
    Weight a = std::min<Weight>(n, inside_bound);
    Weight b = std::min<Weight>(n, q_);
    auto key = std::make_pair(a, b);
    auto it = families_.find(key);
    if (it == families_.end()) it = families_.emplace(key, universal_family(n, a, b)).first;
    for (const auto& s0 : it->second.sets) {
      auto state = grow_good_set(g_, allowed_, lambda_i, q_, k, s0);
      if (!state) continue;
      auto f = dp_compose(g_, allowed_, *state, spec.without(i), k);
      if (!f) continue;
      if (!is_valid_solution(g_, allowed_, spec, k, *f))
        throw std::logic_error("annotated solver: composed solution failed revalidation");
      return f;
    }
    return std::nullopt;
  }

  WeightedGraph g_;
  EdgeSet allowed_;
  Weight q_;
  std::optional<Weight> lambda_;
  std::optional<std::vector<ScanEntry>> scan_;
  Weight scan_budget_ = -1;
  std::map<Weight, std::vector<std::vector<int>>> classes_;
  std::map<std::pair<Weight, Weight>, SepFamily> families_;
};

}  // namespace

std::optional<Solution> solve_annotated_unbreakable(const AnnotatedInstance& inst, Weight q) {
  AnnotatedSolver solver(inst.graph, inst.allowed, q);
  solver.check_precondition(inst.budget);
  auto f = solver.solve(inst.spec, inst.budget);
  if (!f) return std::nullopt;
  if (!is_valid_solution(inst.graph, inst.allowed, inst.spec, inst.budget, *f))
    throw std::logic_error("annotated solver: witness failed revalidation");
  return make_solution(inst.graph, *f);
}

const std::optional<BorderedEntry>& BorderedTable::lookup(int member, const ConnSpec& spec) const {
  for (size_t i = 0; i < subspecs.size(); ++i)
    if (subspecs[i] == spec) return entries.at(member).at(i);
  throw std::invalid_argument("bordered table: unknown sub-spec");
}

BorderedTable solve_bordered_unbreakable(const BoundariedGraph& g, const EdgeSet& allowed,
                                         const ConnSpec& spec, Weight k, Weight q,
                                         Weight family_cap) {
  if (!g.graph.is_connected())
    throw std::invalid_argument("bordered solver: graph must be connected");
  if (static_cast<Weight>(g.boundary_size()) > sat_mul(4, k))
    throw std::invalid_argument("bordered solver: boundary larger than 4k");
  if (static_cast<Weight>(spec.size()) > sat_add(k, 1))
    throw std::invalid_argument("bordered solver: spec longer than k+1");

  BorderedTable out;
  out.family = enumerate_family(g.boundary_size(), std::max<Weight>(sat_mul(2, k), 1), family_cap);
  out.subspecs = spec_subtuples(spec);
  for (const BoundariedGraph& member : out.family) {
    // Gluing preserves host ids, so allowed edges carry over unchanged.
    WeightedGraph glued = boundary_sum(g, member);
    AnnotatedSolver solver(std::move(glued), allowed, sat_add(q, member.graph.vertex_count()));
    std::vector<std::optional<BorderedEntry>> row;
    for (const ConnSpec& sub : out.subspecs) {
      std::optional<BorderedEntry> entry;
      for (Weight kh = 0; kh <= k; ++kh) {
        auto f = solver.solve(sub, kh);
        if (f) {
          if (!is_valid_solution(solver.graph(), allowed, sub, kh, *f))
            throw std::logic_error("bordered solver: witness failed revalidation");
          entry = BorderedEntry{kh, *f};
          break;
        }
      }
      row.push_back(std::move(entry));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

}  // namespace cgwc

#include <doctest.h>

#include "cgwc/oracle.hpp"
#include "cgwc/solver_recursive.hpp"
#include "support.hpp"

using namespace cgwc;
using namespace testsupport;

namespace {

RecursionConfig override_config() {
  RecursionConfig cfg;
  cfg.q_const = 3;
  cfg.p_const = 2;  // echoes the separation cut threshold 2k at k=1
  return cfg;
}

bool oracle_decides(const WeightedGraph& g, const ConnSpec& spec, Weight k) {
  return oracle_solve(g, all_edges(g), spec, k).has_value();
}

}  // namespace

TEST_CASE("default thresholds are astronomically saturated") {
  CHECK(RecursionConfig::default_p(1) == kInfWeight);
  CHECK(RecursionConfig::default_q(1) == kInfWeight);
  RecursionConfig cfg;
  CHECK(cfg.resolved_q(2) == kInfWeight);
}

TEST_CASE("with default thresholds the recursion never fires") {
  auto g = two_blocks_bridge(4);
  RecursionConfig cfg;
  RecursionTrace trace;
  auto sol = solve_connected(g, ConnSpec({3, 3}), 1, cfg, &trace);
  REQUIRE(sol.has_value());
  CHECK(sol->edges == EdgeSet{Edge(3, 4)});
  CHECK(trace.events.empty());
}

TEST_CASE("overridden thresholds fire the separation branch") {
  auto g = two_blocks_bridge(4);
  RecursionTrace trace;
  auto sol = solve_connected(g, ConnSpec({3, 3}), 1, override_config(), &trace);
  REQUIRE(sol.has_value());
  CHECK(sol->edges == EdgeSet{Edge(3, 4)});
  REQUIRE_FALSE(trace.events.empty());
  const auto& event = trace.events.front();
  CHECK(event.side_a.size() == 4);
  CHECK(event.x_hat.size() == 1);
  CHECK(event.progressed);
}

TEST_CASE("trivial connected pre-checks") {
  auto g = cycle_graph(6);
  RecursionConfig cfg;
  CHECK_FALSE(solve_connected(g, ConnSpec({1, 1}), 1, cfg).has_value());
  auto two = solve_connected(g, ConnSpec({1, 1}), 2, cfg);
  REQUIRE(two.has_value());
  CHECK(two->total_weight == 2);
  auto k4 = complete_graph(4);
  auto whole = solve_connected(k4, ConnSpec({3}), 0, cfg);
  REQUIRE(whole.has_value());
  CHECK(whole->edges.empty());
  CHECK_FALSE(solve_connected(k4, ConnSpec({1, 1, 1, 1, 1}), 3, cfg).has_value());
}

TEST_CASE("replacement set equivalence holds on the recorded events") {
  auto g = two_blocks_bridge(4);
  ConnSpec spec({3, 3});
  Weight k = 1;
  RecursionTrace trace;
  solve_connected(g, spec, k, override_config(), &trace);
  REQUIRE_FALSE(trace.events.empty());
  for (const auto& event : trace.events) {
    // The replaced allowed set never grows.
    for (const Edge& e : event.l_star) CHECK(event.allowed.count(e) == 1);
    // Decision equivalence between L and L* for every sub-spec and budget
    // (empty boundary: the only completion is the graph itself).
    REQUIRE(event.boundary.empty());
    for (const ConnSpec& sub : spec_subtuples(spec))
      for (Weight kh = 0; kh <= k; ++kh) {
        bool with_l = brute_decide(event.graph, event.allowed, sub, kh);
        bool with_l_star = brute_decide(event.graph, event.l_star, sub, kh);
        CHECK(with_l == with_l_star);
      }
  }
}

TEST_CASE("graph replacement equivalence holds on the recorded events") {
  auto g = two_blocks_bridge(4);
  ConnSpec spec({3, 3});
  Weight k = 1;
  RecursionTrace trace;
  solve_connected(g, spec, k, override_config(), &trace);
  bool saw_reduction = false;
  for (const auto& event : trace.events) {
    if (!event.reduced) continue;
    saw_reduction = true;
    // Candidates from L* behave identically on the original and the reduced
    // graph, for every sub-spec and budget.
    std::vector<Edge> pool(event.l_star.begin(), event.l_star.end());
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
      EdgeSet f;
      Weight weight = 0;
      for (size_t i = 0; i < pool.size(); ++i)
        if ((mask >> i) & 1) {
          f.insert(pool[i]);
          weight += event.graph.weight(pool[i].u, pool[i].v);
        }
      if (weight > k) continue;
      EdgeSet f_star;
      for (const Edge& e : f)
        f_star.insert(Edge(event.level_to_g_star[e.u], event.level_to_g_star[e.v]));
      for (const ConnSpec& sub : spec_subtuples(spec))
        for (Weight kh = 0; kh <= k; ++kh) {
          bool on_g = is_valid_solution(event.graph, event.l_star, sub, kh, f);
          bool on_g_star = is_valid_solution(event.g_star, event.l_star_in_g_star, sub, kh, f_star);
          CHECK(on_g == on_g_star);
        }
    }
    // Size bound of the reduced replacement side.
    CHECK(event.g_star.vertex_count() < event.graph.vertex_count());
  }
  CHECK(saw_reduction);
}

TEST_CASE("blocked reduction falls back and still matches the oracle") {
  auto g = two_blocks_bridge(4);
  ConnSpec spec({3, 3});
  RecursionConfig cfg = override_config();
  cfg.z_cap = 0;  // forbid the reduction: progress check must fail
  RecursionTrace trace;
  auto sol = solve_connected(g, spec, 1, cfg, &trace);
  REQUIRE(sol.has_value());
  CHECK(is_valid_solution(g, all_edges(g), spec, 1, sol->edges));
  REQUIRE_FALSE(trace.events.empty());
  CHECK_FALSE(trace.events.front().reduced);
  CHECK_FALSE(trace.events.front().progressed);
}

TEST_CASE("oversized completion family falls back to the light edge set") {
  // Two K4 blocks joined by two unit edges: the separation has two cut
  // endpoints on each side, so the side instance needs a 2-boundaried family
  // at weights up to 2, which is over the desk-scale enumeration gate.
  WeightedGraph g(8);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      g.add_edge(i, j, 1);
      g.add_edge(4 + i, 4 + j, 1);
    }
  g.add_edge(2, 4, 1);
  g.add_edge(3, 5, 1);
  ConnSpec spec({3, 3});
  RecursionTrace trace;
  auto sol = solve_connected(g, spec, 1, override_config(), &trace);
  CHECK_FALSE(sol.has_value());  // splitting needs weight 2 > k
  CHECK(oracle_decides(g, spec, 1) == sol.has_value());
  REQUIRE_FALSE(trace.events.empty());
  CHECK(trace.events.front().child_cap_fallback);

  auto sol2 = solve_connected(g, spec, 2, override_config());
  REQUIRE(sol2.has_value());
  CHECK(sol2->total_weight == 2);
}

TEST_CASE("default and override decisions match the oracle on random graphs") {
  RecursionConfig defaults;
  RecursionConfig overrides = override_config();
  int tested = 0;
  for (unsigned seed = 1; seed <= 40; ++seed) {
    auto g = random_graph(6, 0.55, 2, seed);
    if (!g.is_connected()) continue;
    for (Weight k = 0; k <= 2; ++k)
      for (const auto& spec :
           {ConnSpec({1, 1}), ConnSpec({1, 2}), ConnSpec({2, 2}), ConnSpec({1, 1, 1})}) {
        bool expected = oracle_decides(g, spec, k);
        auto with_defaults = solve_connected(g, spec, k, defaults);
        auto with_overrides = solve_connected(g, spec, k, overrides);
        CHECK(with_defaults.has_value() == expected);
        CHECK(with_overrides.has_value() == expected);
        if (with_defaults) CHECK(is_valid_solution(g, all_edges(g), spec, k, with_defaults->edges));
        if (with_overrides)
          CHECK(is_valid_solution(g, all_edges(g), spec, k, with_overrides->edges));
        ++tested;
      }
  }
  CHECK(tested > 100);
}

TEST_CASE("oracle cross-check flag accepts the produced tables") {
  auto g = two_blocks_bridge(4);
  RecursionConfig cfg = override_config();
  cfg.oracle_check = true;
  auto sol = solve_connected(g, ConnSpec({3, 3}), 1, cfg);
  CHECK(sol.has_value());
}

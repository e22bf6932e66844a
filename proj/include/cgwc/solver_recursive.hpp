#pragma once

#include <optional>
#include <vector>

#include "cgwc/solution.hpp"
#include "cgwc/solver_unbreakable.hpp"

namespace cgwc {

// Thresholds of the recursion driver. kAutoConst fields resolve to the
// astronomically large closed-form defaults for the instance budget k, which
// route every desk-scale input to the high-connectivity solver. Overrides
// exercise the recursion; a dynamic progress check guards them.
struct RecursionConfig {
  static constexpr Weight kAutoConst = -1;

  Weight p_const = kAutoConst;
  Weight q_const = kAutoConst;
  Weight family_cap = 6;
  // Child side instances at most this many vertices are solved by direct
  // table scan instead of deeper recursion.
  Weight force_bruteforce_at = 12;
  // Largest replacement boundary for which the graph reduction is attempted.
  Weight z_cap = 12;
  // Revalidate every table entry against an exhaustive scan (slow).
  bool oracle_check = false;

  // Closed-form default thresholds for budget k (saturating).
  static Weight default_p(Weight k);
  static Weight default_q(Weight k);
  Weight resolved_p(Weight k) const { return p_const == kAutoConst ? default_p(k) : p_const; }
  Weight resolved_q(Weight k) const { return q_const == kAutoConst ? default_q(k) : q_const; }
};

// One recursion step, recorded for the equivalence checks in the test suite.
struct RecursionEvent {
  WeightedGraph graph;            // instance graph at this level
  std::vector<int> boundary;      // its boundary
  EdgeSet allowed;                // L
  std::vector<int> side_a;        // chosen separation side
  std::vector<int> x_hat;         // boundary of the side instance (level ids)
  EdgeSet l_hat;                  // allowed edges inside the side
  EdgeSet m_edges;                // witness union from the side instance
  EdgeSet l_star;                 // replacement allowed set
  std::vector<int> z;             // replacement boundary
  bool child_bruteforced = false;
  bool child_cap_fallback = false;
  bool reduced = false;           // graph reduction was attempted
  bool progressed = false;        // |V(G*)| < |V(G)|
  WeightedGraph g_star;
  std::vector<int> g_star_boundary;
  EdgeSet l_star_in_g_star;
  std::vector<int> level_to_g_star;  // vertex map, -1 for dropped vertices
};

struct RecursionTrace {
  std::vector<RecursionEvent> events;
};

// Bordered solver for connected graphs: splits off a good edge separation
// side, solves it recursively, replaces its allowed set by the witness union
// and the side by its cut reduction at +inf, and recurses on the smaller
// graph; without a separation it delegates to the high-connectivity solver.
BorderedTable solve_bordered(const BoundariedGraph& g, const EdgeSet& allowed,
                             const ConnSpec& spec, Weight k, const RecursionConfig& cfg,
                             RecursionTrace* trace = nullptr);

// Full pipeline for connected graphs.
std::optional<Solution> solve_connected(const WeightedGraph& g, const ConnSpec& spec, Weight k,
                                        const RecursionConfig& cfg,
                                        RecursionTrace* trace = nullptr);

}  // namespace cgwc

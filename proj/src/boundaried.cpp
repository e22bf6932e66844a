#include "cgwc/boundaried.hpp"

#include <set>
#include <stdexcept>

namespace cgwc {

BoundariedGraph::BoundariedGraph(WeightedGraph g, std::vector<int> b)
    : graph(std::move(g)), boundary(std::move(b)) {
  std::set<int> seen;
  for (int v : boundary) {
    if (v < 0 || v >= graph.vertex_count())
      throw std::invalid_argument("boundary vertex out of range");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate boundary vertex");
  }
}

bool is_properly_boundaried(const BoundariedGraph& h) {
  for (size_t i = 0; i < h.boundary.size(); ++i)
    for (size_t j = i + 1; j < h.boundary.size(); ++j)
      if (h.graph.has_edge(h.boundary[i], h.boundary[j])) return false;
  std::set<int> bset(h.boundary.begin(), h.boundary.end());
  for (const auto& comp : h.graph.components()) {
    bool hit = false;
    for (int v : comp)
      if (bset.count(v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

WeightedGraph boundary_sum(const BoundariedGraph& f, const BoundariedGraph& h,
                           std::vector<int>* glued_h_ids) {
  if (f.boundary_size() != h.boundary_size())
    throw std::invalid_argument("boundary_sum: boundary length mismatch");
  // With an empty boundary nothing is identified and the sum degenerates to
  // the disjoint union, so the properness restriction only applies otherwise.
  if (h.boundary_size() > 0 && !is_properly_boundaried(h))
    throw std::invalid_argument("boundary_sum: second operand not properly boundaried");

  int nf = f.graph.vertex_count();
  std::vector<int> h_to_glued(h.graph.vertex_count(), -1);
  for (int i = 0; i < h.boundary_size(); ++i) h_to_glued[h.boundary[i]] = f.boundary[i];
  int next = nf;
  for (int v = 0; v < h.graph.vertex_count(); ++v)
    if (h_to_glued[v] < 0) h_to_glued[v] = next++;

  WeightedGraph out(next);
  for (const auto& [e, w] : f.graph.edges()) out.add_edge(e.u, e.v, w);
  for (const auto& [e, w] : h.graph.edges()) out.add_edge(h_to_glued[e.u], h_to_glued[e.v], w);
  if (glued_h_ids) *glued_h_ids = h_to_glued;
  return out;
}

}  // namespace cgwc

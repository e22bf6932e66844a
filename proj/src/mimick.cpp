#include "cgwc/mimick.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cgwc/connectivity.hpp"

namespace cgwc {

Weight cut_reduction_size_bound(int r) {
  if (r < 0) throw std::invalid_argument("negative boundary size");
  if (r == 0) return 0;
  return sat_add(sat_pow(2, sat_pow(2, r - 1)), r);
}

namespace {

struct ReducedComponent {
  // Blocks of the partition product, each a sorted list of original vertex
  // ids; boundary blocks are singletons.
  std::vector<std::vector<int>> blocks;
  std::map<Edge, Weight> block_edges;  // edges between block indices
};

ReducedComponent reduce_component(const WeightedGraph& h, const std::vector<int>& comp,
                                  const std::vector<int>& boundary_piece) {
  std::vector<int> old_ids;
  WeightedGraph sub = h.induced(comp, &old_ids);
  std::vector<int> local_of(h.vertex_count(), -1);
  for (size_t i = 0; i < old_ids.size(); ++i) local_of[old_ids[i]] = static_cast<int>(i);

  std::vector<int> x_local;
  for (int b : boundary_piece) x_local.push_back(local_of[b]);
  int r = static_cast<int>(x_local.size());
  int n = sub.vertex_count();

  // Side keys accumulated over every separator bipartition in the product.
  std::vector<std::vector<int>> key(n);
  auto apply_partition = [&](const std::vector<int>& side_one) {
    std::vector<char> in_one(n, 0);
    for (int v : side_one) in_one[v] = 1;
    for (int v = 0; v < n; ++v) key[v].push_back(in_one[v]);
  };

  // Minimum separators for every unordered boundary split {X, X-bar}; X is
  // canonicalized as the part containing the first boundary vertex.
  for (std::uint32_t mask = 0; r >= 2 && mask < (1u << (r - 1)); ++mask) {
    std::vector<int> xs = {x_local[0]}, ys;
    for (int i = 1; i < r; ++i)
      ((mask >> (i - 1)) & 1 ? xs : ys).push_back(x_local[i]);
    if (ys.empty()) continue;  // proper nonempty splits only
    CutResult cut = min_separator(sub, xs, ys);
    apply_partition(cut.partition->first);
  }

  // The (boundary, v*) separator: v* minimizes the separator weight from the
  // whole boundary piece, lowest id first.
  if (n > r) {
    int best_v = -1;
    Weight best_w = 0;
    for (int v = 0; v < n; ++v) {
      if (std::find(x_local.begin(), x_local.end(), v) != x_local.end()) continue;
      Weight w = min_separator_weight(sub, x_local, {v});
      if (best_v < 0 || w < best_w) {
        best_v = v;
        best_w = w;
      }
    }
    CutResult cut = min_separator(sub, x_local, {best_v});
    apply_partition(cut.partition->first);
  }

  // Boundary singletons: give each boundary vertex a unique tag.
  for (int v = 0; v < n; ++v) {
    auto it = std::find(x_local.begin(), x_local.end(), v);
    key[v].push_back(it == x_local.end() ? -1 : static_cast<int>(it - x_local.begin()));
  }

  // Group by key; block order by smallest original vertex.
  std::map<std::vector<int>, std::vector<int>> by_key;
  for (int v = 0; v < n; ++v) by_key[key[v]].push_back(old_ids[v]);
  ReducedComponent out;
  for (auto& [k, vs] : by_key) {
    std::sort(vs.begin(), vs.end());
    out.blocks.push_back(vs);
  }
  std::sort(out.blocks.begin(), out.blocks.end());

  std::vector<int> block_of(h.vertex_count(), -1);
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : out.blocks[b]) block_of[v] = static_cast<int>(b);
  for (const auto& [e, w] : sub.edges()) {
    int a = block_of[old_ids[e.u]], b = block_of[old_ids[e.v]];
    if (a == b) continue;
    Edge be(a, b);
    out.block_edges[be] = sat_add(out.block_edges[be], w);
  }
  return out;
}

}  // namespace

BoundariedGraph cut_reduce(const BoundariedGraph& h, Weight p, std::vector<int>* old_to_new) {
  if (!is_properly_boundaried(h)) throw std::invalid_argument("cut_reduce: improper boundary");
  if (p < 1) throw std::invalid_argument("cut_reduce: p must be >= 1 or +inf");
  int r = h.boundary_size();

  std::vector<int> boundary_pos(h.graph.vertex_count(), -1);
  for (int i = 0; i < r; ++i) boundary_pos[h.boundary[i]] = i;

  // Reduce per component; assemble with boundary vertices first (ids 0..r-1
  // in boundary order), then the non-boundary blocks by smallest member.
  std::vector<ReducedComponent> reduced;
  std::vector<std::vector<int>> comp_list = h.graph.components();
  for (const auto& comp : comp_list) {
    std::vector<int> piece;
    for (int b : h.boundary)
      if (std::find(comp.begin(), comp.end(), b) != comp.end()) piece.push_back(b);
    reduced.push_back(reduce_component(h.graph, comp, piece));
  }

  std::vector<int> map_old(h.graph.vertex_count(), -1);
  std::vector<std::pair<int, int>> nonboundary_blocks;  // (comp idx, block idx)
  int next_id = r;
  for (size_t c = 0; c < reduced.size(); ++c)
    for (size_t b = 0; b < reduced[c].blocks.size(); ++b) {
      const auto& block = reduced[c].blocks[b];
      int id;
      if (boundary_pos[block[0]] >= 0) {
        id = boundary_pos[block[0]];
      } else {
        id = next_id++;
      }
      for (int v : block) map_old[v] = id;
    }

  WeightedGraph out(next_id);
  for (size_t c = 0; c < reduced.size(); ++c)
    for (const auto& [be, w] : reduced[c].block_edges) {
      int u = map_old[reduced[c].blocks[be.u][0]];
      int v = map_old[reduced[c].blocks[be.v][0]];
      out.add_edge(u, v, std::min(w, p));
    }
  (void)nonboundary_blocks;

  std::vector<int> boundary(r);
  for (int i = 0; i < r; ++i) boundary[i] = i;
  BoundariedGraph result(std::move(out), std::move(boundary));

  // Per-component size bound of the construction.
  Weight total_bound = 0;
  for (const auto& comp : comp_list) {
    int ri = 0;
    for (int v : comp)
      if (boundary_pos[v] >= 0) ++ri;
    total_bound = sat_add(total_bound, ri == 0 ? 1 : cut_reduction_size_bound(ri));
  }
  if (static_cast<Weight>(result.graph.vertex_count()) > std::min(total_bound, cut_reduction_size_bound(r)))
    throw std::logic_error("cut_reduce: size bound violated");

  if (old_to_new) *old_to_new = map_old;
  return result;
}

namespace {

std::vector<Weight> weighted_signature(const WeightedGraph& g, const std::vector<int>& perm) {
  // Upper-triangle weight matrix under the given relabeling.
  int n = g.vertex_count();
  std::vector<Weight> sig;
  sig.reserve(n * (n - 1) / 2);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sig.push_back(g.weight(inv[i], inv[j]));
  return sig;
}

// Canonical signature with the first r vertices fixed pointwise.
std::vector<Weight> canonical_signature(const WeightedGraph& g, int r) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Weight> best = weighted_signature(g, perm);
  std::vector<int> tail(n - r);
  for (int i = r; i < n; ++i) tail[i - r] = i;
  while (std::next_permutation(tail.begin(), tail.end())) {
    for (int i = r; i < n; ++i) perm[tail[i - r]] = i;
    best = std::min(best, weighted_signature(g, perm));
    for (int i = r; i < n; ++i) perm[tail[i - r]] = tail[i - r];
  }
  return best;
}

}  // namespace

std::vector<BoundariedGraph> enumerate_family(int r, Weight s, Weight cap) {
  if (r < 0) throw std::invalid_argument("enumerate_family: negative r");
  if (r == 0) return {BoundariedGraph(WeightedGraph(0), {})};
  if (s < 1) throw std::invalid_argument("enumerate_family: s must be >= 1");

  Weight bound = cut_reduction_size_bound(r);
  if (bound > cap)
    throw FamilyCapExceeded("family vertex bound " + weight_to_string(bound) +
                            " exceeds cap " + weight_to_string(cap));
  int max_n = static_cast<int>(bound);

  // Desk-scale guard on the raw enumeration size.
  double work = 0;
  for (int n = r; n <= max_n; ++n) {
    int pairs = n * (n - 1) / 2 - r * (r - 1) / 2;
    work += std::pow(static_cast<double>(s) + 1, pairs);
  }
  if (work > 2e6) throw FamilyCapExceeded("family enumeration too large for desk scale");

  std::vector<int> boundary(r);
  for (int i = 0; i < r; ++i) boundary[i] = i;

  std::set<std::pair<int, std::vector<Weight>>> seen;
  std::vector<BoundariedGraph> out;
  for (int n = r; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (i >= r || j >= r) pairs.emplace_back(i, j);  // boundary stays independent
    std::vector<Weight> assign(pairs.size(), 0);
    while (true) {
      WeightedGraph g(n);
      for (size_t i = 0; i < pairs.size(); ++i)
        if (assign[i] > 0) g.add_edge(pairs[i].first, pairs[i].second, assign[i]);
      BoundariedGraph candidate(g, boundary);
      bool ok = is_properly_boundaried(candidate);
      if (ok) {
        for (const auto& comp : g.components()) {
          bool has_outside = false;
          for (int v : comp)
            if (v >= r) has_outside = true;
          if (!has_outside) continue;
          bool witness = false;
          for (int v : comp) {
            if (v < r) continue;
            if (min_separator_weight(g, boundary, {v}) <= s) {
              witness = true;
              break;
            }
          }
          if (!witness) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        auto key = std::make_pair(n, canonical_signature(g, r));
        if (seen.insert(key).second) out.push_back(candidate);
      }
      size_t pos = 0;
      while (pos < assign.size() && ++assign[pos] > s) assign[pos++] = 0;
      if (pos == assign.size()) break;
      if (assign.empty()) break;
    }
  }
  return out;
}

}  // namespace cgwc

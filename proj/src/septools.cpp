#include "cgwc/septools.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>

namespace cgwc {

namespace {

using Mask = std::uint64_t;

void subsets_up_to(int n, int max_size, std::vector<Mask>& out) {
  out.clear();
  std::function<void(int, Mask, int)> rec = [&](int start, Mask mask, int size) {
    out.push_back(mask);
    if (size == max_size) return;
    for (int i = start; i < n; ++i) rec(i + 1, mask | (Mask(1) << i), size + 1);
  };
  rec(0, 0, 0);
}

std::vector<int> mask_to_set(Mask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

SepFamily universal_family(int n, Weight a, Weight b) {
  if (n < 0 || n > 62) throw std::invalid_argument("universal_family: n out of range");
  if (a < 0 || b < 0) throw std::invalid_argument("universal_family: negative parameter");
  SepFamily family;
  family.universe_size = n;
  family.a = a;
  family.b = b;

  Mask full = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
  std::vector<Mask> pool;
  if (a == 0) {
    pool = {0};
  } else if (b == 0) {
    pool = {full};
  } else {
    // Either all complements of <=b-subsets (S = U \ B covers every (A,B)
    // with B inside the removed part) or all <=a-subsets (S = A); pick the
    // smaller pool.
    int ai = static_cast<int>(std::min<Weight>(a, n));
    int bi = static_cast<int>(std::min<Weight>(b, n));
    auto count_upto = [&](int k) {
      double total = 0, c = 1;
      for (int i = 0; i <= k; ++i) {
        total += c;
        c = c * (n - i) / (i + 1);
      }
      return total;
    };
    std::vector<Mask> raw;
    if (count_upto(bi) <= count_upto(ai)) {
      subsets_up_to(n, bi, raw);
      for (Mask m : raw) pool.push_back(full & ~m);
    } else {
      subsets_up_to(n, ai, pool);
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Greedy cover at small scale: keep only pool sets that add coverage,
  // picking the one covering the most uncovered demand pairs each round.
  bool small = n <= 12 && a + b <= 4;
  if (small && a > 0 && b > 0) {
    std::vector<Mask> as, bs;
    subsets_up_to(n, static_cast<int>(std::min<Weight>(a, n)), as);
    subsets_up_to(n, static_cast<int>(std::min<Weight>(b, n)), bs);
    std::vector<std::pair<Mask, Mask>> demands;
    for (Mask A : as)
      for (Mask B : bs)
        if ((A & B) == 0) demands.emplace_back(A, B);
    std::vector<char> covered(demands.size(), 0);
    size_t remaining = demands.size();
    std::vector<Mask> chosen;
    while (remaining > 0) {
      size_t best_idx = 0, best_gain = 0;
      for (size_t i = 0; i < pool.size(); ++i) {
        size_t gain = 0;
        for (size_t d = 0; d < demands.size(); ++d)
          if (!covered[d] && (demands[d].first & ~pool[i]) == 0 && (demands[d].second & pool[i]) == 0)
            ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best_idx = i;
        }
      }
      if (best_gain == 0) break;  // cannot happen for the constructed pools
      chosen.push_back(pool[best_idx]);
      for (size_t d = 0; d < demands.size(); ++d)
        if (!covered[d] && (demands[d].first & ~pool[best_idx]) == 0 &&
            (demands[d].second & pool[best_idx]) == 0) {
          covered[d] = 1;
          --remaining;
        }
    }
    std::sort(chosen.begin(), chosen.end());
    pool = std::move(chosen);
  }

  for (Mask m : pool) family.sets.push_back(mask_to_set(m));
  std::sort(family.sets.begin(), family.sets.end());

  if (small && !verify_covering(family))
    throw std::logic_error("universal_family: covering verification failed");
  return family;
}

bool verify_covering(const SepFamily& family) {
  int n = family.universe_size;
  if (n > 62) throw std::invalid_argument("verify_covering: universe too large");
  std::vector<Mask> set_masks;
  for (const auto& s : family.sets) {
    Mask m = 0;
    for (int v : s) m |= Mask(1) << v;
    set_masks.push_back(m);
  }
  std::vector<Mask> as, bs;
  subsets_up_to(n, static_cast<int>(std::min<Weight>(family.a, n)), as);
  subsets_up_to(n, static_cast<int>(std::min<Weight>(family.b, n)), bs);
  for (Mask A : as)
    for (Mask B : bs) {
      if (A & B) continue;
      bool ok = false;
      for (Mask S : set_masks)
        if ((A & ~S) == 0 && (B & S) == 0) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

namespace {

// Shared branching core: grows connected supersets of {v}, visiting each set
// exactly once via the include/forbid discipline.
void enumerate_connected(const WeightedGraph& g, int v, int max_size,
                         const std::function<bool(const std::vector<int>&)>& prune,
                         const std::function<void(const std::vector<int>&)>& emit) {
  int n = g.vertex_count();
  std::vector<char> in_set(n, 0), forbidden(n, 0);
  std::vector<int> current = {v};
  in_set[v] = 1;
  std::function<void()> rec = [&]() {
    emit(current);
    if (static_cast<int>(current.size()) == max_size) return;
    if (prune && prune(current)) return;
    // Frontier in ascending order.
    std::vector<int> frontier;
    for (int u : current)
      for (auto [w, wt] : g.neighbors(u))
        if (!in_set[w] && !forbidden[w]) frontier.push_back(w);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    for (size_t i = 0; i < frontier.size(); ++i) {
      int c = frontier[i];
      current.push_back(c);
      in_set[c] = 1;
      rec();
      in_set[c] = 0;
      current.pop_back();
      forbidden[c] = 1;  // later branches must avoid c
    }
    for (int c : frontier) forbidden[c] = 0;
  };
  rec();
}

}  // namespace

std::vector<std::vector<int>> enumerate_connected_sets(const WeightedGraph& g, int v, int b, int f) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  if (b < 0 || f < 0) throw std::invalid_argument("b and f must be nonnegative");
  std::vector<std::vector<int>> out;
  std::vector<char> in_set(g.vertex_count(), 0);
  auto neighborhood_size = [&](const std::vector<int>& set) {
    for (int u : set) in_set[u] = 1;
    int count = 0;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int u : set)
      for (auto [w, wt] : g.neighbors(u))
        if (!in_set[w] && !seen[w]) {
          seen[w] = 1;
          ++count;
        }
    for (int u : set) in_set[u] = 0;
    return count;
  };
  enumerate_connected(
      g, v, b + 1, nullptr,
      [&](const std::vector<int>& set) {
        if (static_cast<int>(set.size()) != b + 1) return;
        if (neighborhood_size(set) != f) return;
        auto sorted = set;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> connected_sets_up_to(const WeightedGraph& g, int v, int max_size) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  if (max_size < 1) return {};
  std::vector<std::vector<int>> out;
  enumerate_connected(g, v, max_size, nullptr, [&](const std::vector<int>& set) {
    auto sorted = set;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Weight restricted_bfs_size_bound(Weight r) {
  if (r < 2) throw std::invalid_argument("size bound defined for r >= 2");
  if (is_inf(r)) return kInfWeight;
  Weight p = sat_pow(r, sat_add(r, 1));
  if (is_inf(p)) return kInfWeight;
  return (p - 1) / (r - 1);
}

RestrictedBfsResult restricted_bfs(const WeightedGraph& g, int u, int r) {
  if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<int> level(g.vertex_count(), -1);
  std::queue<int> q;
  level[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (level[x] > r - 1) continue;
    const auto& nb = g.neighbors(x);  // ascending by id
    int take = std::min<int>(r, static_cast<int>(nb.size()));
    for (int i = 0; i < take; ++i) {
      int y = nb[i].first;
      if (level[y] < 0) {
        level[y] = level[x] + 1;
        q.push(y);
      }
    }
  }
  RestrictedBfsResult result;
  std::vector<int> labeled;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (level[v] >= 0) {
      labeled.push_back(v);
      result.labels[v] = level[v];
    }
  result.subgraph = g.induced(labeled, &result.old_ids);
  if (r >= 2 &&
      static_cast<Weight>(result.old_ids.size()) > restricted_bfs_size_bound(r))
    throw std::logic_error("restricted_bfs: size bound violated");
  return result;
}

}  // namespace cgwc

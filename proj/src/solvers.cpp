#include "acyclic/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "acyclic/errors.hpp"

namespace acyclic {

namespace {

// Greedy vertex-disjoint cycle packing starting from `first`. Any FVS hits
// each packed cycle separately, so the count is a lower bound. Stops once
// the count exceeds `cap`.
std::size_t packing_bound(const Digraph& d, VertexSet removed, const std::vector<Vertex>& first,
                          std::size_t cap) {
  std::size_t packed = 0;
  std::vector<Vertex> cycle = first;
  while (!cycle.empty()) {
    if (++packed > cap) break;
    for (Vertex v : cycle) removed.insert(v);
    cycle = shortest_cycle(d, removed);
  }
  return packed;
}

class FeedbackSearch {
 public:
  FeedbackSearch(const Digraph& d, VertexSet removed) : d_(d), removed_(std::move(removed)) {}

  bool within(std::size_t budget) {
    auto cycle = shortest_cycle(d_, removed_);
    if (cycle.empty()) return true;
    if (budget == 0) return false;
    if (packing_bound(d_, removed_, cycle, budget) > budget) return false;
    std::sort(cycle.begin(), cycle.end());
    for (Vertex v : cycle) {
      removed_.insert(v);
      chosen_.push_back(v);
      if (within(budget - 1)) return true;
      chosen_.pop_back();
      removed_.erase(v);
    }
    return false;
  }

  const std::vector<Vertex>& chosen() const noexcept { return chosen_; }

 private:
  const Digraph& d_;
  VertexSet removed_;
  std::vector<Vertex> chosen_;
};

std::size_t degree_within(const UndirectedGraph& g, Vertex v, const VertexSet& gone) {
  std::size_t deg = 0;
  for (Vertex w : g.neighbors(v))
    if (!gone.contains(w)) ++deg;
  return deg;
}

// Vertices of degree <= 1 lie on no cycle; peel them repeatedly.
VertexSet peel_acyclic_part(const UndirectedGraph& g, const VertexSet& removed) {
  VertexSet gone = removed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!gone.contains(v) && degree_within(g, v, gone) <= 1) {
        gone.insert(v);
        changed = true;
      }
    }
  }
  return gone;
}

// Vertex set of a shortest cycle of g - gone, empty if none. The closed walk
// with globally minimal length found by BFS is always a simple cycle.
std::vector<Vertex> shortest_undirected_cycle(const UndirectedGraph& g, const VertexSet& gone) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  std::size_t best = kUnseen;
  std::vector<Vertex> best_cycle;
  for (Vertex s = 0; s < n; ++s) {
    if (gone.contains(s)) continue;
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (gone.contains(w) || w == parent[u]) continue;
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (dist[u] + dist[w] + 1 < best) {
          best = dist[u] + dist[w] + 1;
          best_cycle.clear();
          for (Vertex a = u; a != s; a = parent[a]) best_cycle.push_back(a);
          for (Vertex b = w; b != s; b = parent[b]) best_cycle.push_back(b);
          best_cycle.push_back(s);
        }
      }
    }
    if (best == 3) break;
  }
  std::sort(best_cycle.begin(), best_cycle.end());
  best_cycle.erase(std::unique(best_cycle.begin(), best_cycle.end()), best_cycle.end());
  return best_cycle;
}

class ForestSearch {
 public:
  explicit ForestSearch(const UndirectedGraph& g) : g_(g), removed_(g.order()) {}

  bool within(std::size_t budget) {
    auto gone = peel_acyclic_part(g_, removed_);
    auto cycle = shortest_undirected_cycle(g_, gone);
    if (cycle.empty()) return true;
    if (budget == 0) return false;
    for (Vertex v : cycle) {
      removed_.insert(v);
      chosen_.push_back(v);
      if (within(budget - 1)) return true;
      chosen_.pop_back();
      removed_.erase(v);
    }
    return false;
  }

  const std::vector<Vertex>& chosen() const noexcept { return chosen_; }

 private:
  const UndirectedGraph& g_;
  VertexSet removed_;
  std::vector<Vertex> chosen_;
};

// Union-find cycle check on the induced subgraph.
bool induced_forest(const UndirectedGraph& g, const VertexSet& s) {
  std::vector<Vertex> root(g.order());
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    if (!s.contains(u) || !s.contains(v)) continue;
    Vertex a = find(u), b = find(v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

void check_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order())
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(d.order()));
}

}  // namespace

std::string_view to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::fvs:
      return "fvs";
    case WitnessKind::acyclic_set:
      return "acyclic-set";
    case WitnessKind::induced_forest:
      return "induced-forest";
  }
  return "unknown";
}

SolverWitness min_fvs(const Digraph& d) { return min_fvs(d, VertexSet(d.order())); }

SolverWitness min_fvs(const Digraph& d, const VertexSet& excluded) {
  if (excluded.universe() != d.order()) throw InvalidInput("excluded set universe mismatch");
  for (std::size_t budget = 0;; ++budget) {
    FeedbackSearch search(d, excluded);
    if (search.within(budget)) {
      return SolverWitness{WitnessKind::fvs, search.chosen().size(),
                           VertexSet(d.order(), search.chosen())};
    }
  }
}

SolverWitness max_acyclic_set(const Digraph& d) {
  auto fvs = min_fvs(d);
  auto keep = fvs.set.complement();
  return SolverWitness{WitnessKind::acyclic_set, keep.size(), std::move(keep)};
}

bool has_acyclic_set_of_size(const Digraph& d, std::size_t k) {
  if (k > d.order())
    throw InvalidParameter("acyclic set size " + std::to_string(k) + " exceeds order " +
                           std::to_string(d.order()));
  FeedbackSearch search(d, VertexSet(d.order()));
  return search.within(d.order() - k);
}

bool pair_in_some_min_fvs(const Digraph& d, Vertex x, Vertex y) {
  check_vertex(d, x);
  check_vertex(d, y);
  if (x == y) throw InvalidInput("pair must consist of two distinct vertices");
  const auto whole = min_fvs(d).size;
  const auto without = min_fvs(d, VertexSet(d.order(), {x, y})).size;
  return without + 2 == whole;
}

SolverWitness brute_force_min_fvs(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kBruteForceLimit)
    throw ResourceGuard("brute force limited to " + std::to_string(kBruteForceLimit) +
                        " vertices, got " + std::to_string(n));
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::size_t k = 0; k <= n; ++k) {
    // Gosper's hack over k-subsets of [0, n).
    std::uint32_t subset = (std::uint32_t{1} << k) - 1;
    while (subset <= all) {
      VertexSet keep(n);
      for (Vertex v = 0; v < n; ++v)
        if (!((subset >> v) & 1U)) keep.insert(v);
      if (is_acyclic(d, keep)) {
        auto fvs = keep.complement();
        return SolverWitness{WitnessKind::fvs, k, std::move(fvs)};
      }
      if (subset == 0) break;
      std::uint32_t low = subset & (~subset + 1);
      std::uint32_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return SolverWitness{WitnessKind::fvs, n, VertexSet::full(n)};
}

SolverWitness max_induced_forest(const UndirectedGraph& g) {
  for (std::size_t budget = 0;; ++budget) {
    ForestSearch search(g);
    if (search.within(budget)) {
      VertexSet keep = VertexSet(g.order(), search.chosen()).complement();
      return SolverWitness{WitnessKind::induced_forest, keep.size(), std::move(keep)};
    }
  }
}

bool is_induced_forest(const UndirectedGraph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InvalidInput("vertex set universe mismatch");
  return induced_forest(g, s);
}

bool verify_witness(const Digraph& d, const SolverWitness& w) {
  if (w.set.universe() != d.order() || w.set.size() != w.size) return false;
  switch (w.kind) {
    case WitnessKind::fvs:
      return is_acyclic(d, w.set.complement());
    case WitnessKind::acyclic_set:
      return is_acyclic(d, w.set);
    case WitnessKind::induced_forest:
      return false;
  }
  return false;
}

bool verify_witness(const UndirectedGraph& g, const SolverWitness& w) {
  if (w.kind != WitnessKind::induced_forest) return false;
  if (w.set.universe() != g.order() || w.set.size() != w.size) return false;
  return induced_forest(g, w.set);
}

}  // namespace acyclic

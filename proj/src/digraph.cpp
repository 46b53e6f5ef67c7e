#include "acyclic/digraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "acyclic/errors.hpp"

namespace acyclic {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }

void build_csr(std::size_t order, std::span<const Arc> arcs, bool by_source,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(order + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets[(by_source ? u : v) + 1];
  for (std::size_t i = 0; i < order; ++i) offsets[i + 1] += offsets[i];
  targets.resize(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : arcs) {
    if (by_source)
      targets[cursor[u]++] = v;
    else
      targets[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < order; ++i)
    std::sort(targets.begin() + offsets[i], targets.begin() + offsets[i + 1]);
}

std::string arc_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) { return VertexSet(universe).complement(); }

bool VertexSet::contains(Vertex v) const noexcept {
  return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_)
    throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size " +
                       std::to_string(universe_));
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_)
    throw InvalidInput("vertex " + std::to_string(v) + " outside universe of size " +
                       std::to_string(universe_));
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (auto tail = universe_ % kWordBits; tail != 0 && !out.words_.empty())
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

Digraph::Digraph(std::size_t order, std::vector<Arc> arcs) : order_(order), arcs_(std::move(arcs)) {
  if (order_ > std::numeric_limits<Vertex>::max())
    throw InvalidInput("digraph order exceeds vertex id range");
  for (const auto& [u, v] : arcs_) {
    if (u >= order_ || v >= order_) throw InvalidInput("arc endpoint out of range " + arc_text(u, v));
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  build_csr(order_, arcs_, true, out_offsets_, out_targets_);
  build_csr(order_, arcs_, false, in_offsets_, in_sources_);
}

std::span<const Vertex> Digraph::out(Vertex v) const noexcept {
  return std::span<const Vertex>(out_targets_).subspan(out_offsets_[v],
                                                       out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const Vertex> Digraph::in(Vertex v) const noexcept {
  return std::span<const Vertex>(in_sources_).subspan(in_offsets_[v],
                                                      in_offsets_[v + 1] - in_offsets_[v]);
}

bool Digraph::has_arc(Vertex u, Vertex v) const noexcept {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

OrientedGraph::OrientedGraph(Digraph d) : Digraph(std::move(d)) {
  for (const auto& [u, v] : arcs())
    if (has_arc(v, u)) throw InvalidInput("digon between " + arc_text(u, v));
}

OrientedGraph::OrientedGraph(std::size_t order, std::vector<Arc> arcs)
    : OrientedGraph(Digraph(order, std::move(arcs))) {}

UndirectedGraph::UndirectedGraph(std::size_t order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= order_ || v >= order_) throw InvalidInput("edge endpoint out of range " + arc_text(u, v));
    if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(order_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < order_; ++i) offsets_[i + 1] += offsets_[i];
  adjacent_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacent_[cursor[u]++] = v;
    adjacent_[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < order_; ++i)
    std::sort(adjacent_.begin() + offsets_[i], adjacent_.begin() + offsets_[i + 1]);
}

std::span<const Vertex> UndirectedGraph::neighbors(Vertex v) const noexcept {
  return std::span<const Vertex>(adjacent_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool is_acyclic(const Digraph& d, const VertexSet& s) {
  if (s.universe() != d.order())
    throw InvalidInput("vertex set universe " + std::to_string(s.universe()) +
                       " does not match digraph order " + std::to_string(d.order()));
  // Kahn peeling restricted to s.
  std::vector<std::size_t> indegree(d.order(), 0);
  for (const auto& [u, v] : d.arcs())
    if (s.contains(u) && s.contains(v)) ++indegree[v];
  std::vector<Vertex> ready;
  for (Vertex v : s.members())
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t peeled = 0;
  while (!ready.empty()) {
    Vertex u = ready.back();
    ready.pop_back();
    ++peeled;
    for (Vertex v : d.out(u))
      if (s.contains(v) && --indegree[v] == 0) ready.push_back(v);
  }
  return peeled == s.size();
}

std::vector<Vertex> shortest_cycle(const Digraph& d, const VertexSet& removed) {
  const std::size_t n = d.order();
  if (removed.universe() != n) throw InvalidInput("removed-set universe does not match digraph");
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);

  std::size_t best = kUnseen;
  std::vector<Vertex> best_cycle;
  for (Vertex s = 0; s < n; ++s) {
    if (removed.contains(s)) continue;
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    queue.assign(1, s);
    bool closed = false;
    for (std::size_t head = 0; head < queue.size() && !closed; ++head) {
      Vertex u = queue[head];
      if (dist[u] + 1 >= best) break;
      for (Vertex v : d.out(u)) {
        if (removed.contains(v)) continue;
        if (v == s) {
          best = dist[u] + 1;
          best_cycle.clear();
          for (Vertex w = u; w != s; w = parent[w]) best_cycle.push_back(w);
          best_cycle.push_back(s);
          std::reverse(best_cycle.begin(), best_cycle.end());
          closed = true;
          break;
        }
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (best == 2) break;
  }
  return best_cycle;
}

std::optional<std::size_t> digirth(const Digraph& d) {
  auto cycle = shortest_cycle(d, VertexSet(d.order()));
  if (cycle.empty()) return std::nullopt;
  return cycle.size();
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const auto& [u, v] : d.arcs()) arcs.emplace_back(v, u);
  return Digraph(d.order(), std::move(arcs));
}

OrientedGraph orient(const UndirectedGraph& g, std::uint64_t mask) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if ((mask >> i) & 1U) std::swap(u, v);
    arcs.emplace_back(u, v);
  }
  return OrientedGraph(g.order(), std::move(arcs));
}

std::uint64_t OrientationCursor::domain_size(std::size_t edge_count, bool dedup_reversal) {
  if (edge_count > 63) throw ResourceGuard("orientation enumeration limited to 63 edges");
  if (edge_count == 0) return 1;
  return std::uint64_t{1} << (dedup_reversal ? edge_count - 1 : edge_count);
}

OrientationCursor::OrientationCursor(const UndirectedGraph& g, bool dedup_reversal)
    : OrientationCursor(g, dedup_reversal, 0, domain_size(g.edge_count(), dedup_reversal)) {}

OrientationCursor::OrientationCursor(const UndirectedGraph& g, bool dedup_reversal,
                                     std::uint64_t begin, std::uint64_t end)
    : graph_(&g), next_(begin), end_(std::min(end, domain_size(g.edge_count(), dedup_reversal))) {}

std::optional<OrientedGraph> OrientationCursor::next() {
  if (next_ >= end_) return std::nullopt;
  return orient(*graph_, next_++);
}

std::vector<OrientedGraph> orientations(const UndirectedGraph& g, bool dedup_reversal) {
  std::vector<OrientedGraph> out;
  OrientationCursor cursor(g, dedup_reversal);
  while (auto d = cursor.next()) out.push_back(std::move(*d));
  return out;
}

}  // namespace acyclic

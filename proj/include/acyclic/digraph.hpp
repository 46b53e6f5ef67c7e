#pragma once

// Core graph types: directed graphs on dense vertex ids, their oriented
// (digon-free) refinement, simple undirected graphs, and vertex subsets.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace acyclic {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of {0, ..., universe-1} stored as a packed bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<Vertex> members() const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Loop-free digraph with set semantics on arcs. Immutable once built.
/// Duplicate arcs in the input collapse; loops and out-of-range endpoints
/// are rejected with InvalidInput.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t order, std::vector<Arc> arcs);

  std::size_t order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  /// Sorted lexicographically.
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Vertex> out(Vertex v) const noexcept;
  std::span<const Vertex> in(Vertex v) const noexcept;
  bool has_arc(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Arc> arcs_;
  // CSR adjacency; neighbour lists are sorted.
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<Vertex> out_targets_, in_sources_;
};

/// A Digraph that additionally has no digon (u->v together with v->u).
class OrientedGraph : public Digraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(Digraph d);
  OrientedGraph(std::size_t order, std::vector<Arc> arcs);
};

/// Simple undirected graph. Edges are stored normalised as (u, v) with u < v
/// and sorted; the position of an edge in edges() is its canonical index.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacent_;
};

/// True iff the subgraph of `d` induced by `s` has no directed cycle.
/// Throws InvalidInput when `s` is over a different universe.
bool is_acyclic(const Digraph& d, const VertexSet& s);

/// Length of a shortest directed cycle, or nullopt for an acyclic digraph.
std::optional<std::size_t> digirth(const Digraph& d);

/// Vertices of a shortest directed cycle among the vertices not in
/// `removed`, listed along the cycle starting from its smallest-id source
/// in BFS order. Empty when none exists.
std::vector<Vertex> shortest_cycle(const Digraph& d, const VertexSet& removed);

Digraph reverse(const Digraph& d);

/// Orientation of `g` selected by `mask`: bit i clear orients edge i of
/// g.edges() from its smaller to its larger endpoint, set reverses it.
OrientedGraph orient(const UndirectedGraph& g, std::uint64_t mask);

/// Ascending cursor over orientation masks of an undirected graph. With
/// reversal dedup only masks whose top bit is clear are produced, which is
/// exactly one mask of each {mask, complement} pair.
class OrientationCursor {
 public:
  OrientationCursor(const UndirectedGraph& g, bool dedup_reversal);
  /// Restrict to masks in [begin, end) of the full domain.
  OrientationCursor(const UndirectedGraph& g, bool dedup_reversal, std::uint64_t begin,
                    std::uint64_t end);

  /// Number of masks in the domain, independent of any sub-range.
  static std::uint64_t domain_size(std::size_t edge_count, bool dedup_reversal);

  std::optional<OrientedGraph> next();
  std::uint64_t position() const noexcept { return next_; }
  std::uint64_t end() const noexcept { return end_; }

 private:
  const UndirectedGraph* graph_;
  std::uint64_t next_;
  std::uint64_t end_;
};

/// Materialises every orientation. Intended for small graphs and tests.
std::vector<OrientedGraph> orientations(const UndirectedGraph& g, bool dedup_reversal);

}  // namespace acyclic

#pragma once

// Feedback-set kernel for digraphs on at most 64 vertices. Adjacency rows
// are bitmasks, BFS runs layer by layer on whole words. This is the inner
// loop of orientation sweeps; the Digraph-based solvers remain the
// reference implementation it is tested against.

#include <cstddef>
#include <cstdint>

#include "acyclic/digraph.hpp"

namespace acyclic {

class BitDigraph {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  explicit BitDigraph(const Digraph& d);
  /// Orientation of g selected by mask, same convention as orient().
  BitDigraph(const UndirectedGraph& g, std::uint64_t mask);

  std::size_t order() const noexcept { return order_; }
  std::uint64_t all() const noexcept;

  /// Drops vertices without an in- or out-neighbour inside `alive` until
  /// stable. The result contains every vertex lying on a cycle.
  std::uint64_t trim(std::uint64_t alive) const noexcept;

  /// Length of a shortest cycle inside `alive` (0 if none); its vertex set
  /// is written to `cycle`.
  std::size_t shortest_cycle(std::uint64_t alive, std::uint64_t& cycle) const noexcept;

  bool fvs_within(std::uint64_t alive, std::size_t budget) const noexcept;
  std::size_t min_fvs_size() const noexcept;
  bool has_acyclic_set_of_size(std::size_t k) const noexcept;
  std::size_t max_acyclic_set_size() const noexcept { return order_ - min_fvs_size(); }

 private:
  std::size_t order_ = 0;
  std::uint64_t out_[kMaxOrder] = {};
  std::uint64_t in_[kMaxOrder] = {};
};

}  // namespace acyclic

#include "acyclic/bit_kernel.hpp"

#include <bit>
#include <string>

#include "acyclic/errors.hpp"

namespace acyclic {

namespace {

constexpr std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

std::size_t lowest(std::uint64_t mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

void guard_order(std::size_t n) {
  if (n > BitDigraph::kMaxOrder)
    throw ResourceGuard("bit kernel supports at most 64 vertices, got " + std::to_string(n));
}

}  // namespace

BitDigraph::BitDigraph(const Digraph& d) : order_(d.order()) {
  guard_order(order_);
  for (const auto& [u, v] : d.arcs()) {
    out_[u] |= bit(v);
    in_[v] |= bit(u);
  }
}

BitDigraph::BitDigraph(const UndirectedGraph& g, std::uint64_t mask) : order_(g.order()) {
  guard_order(order_);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if ((mask >> i) & 1U) std::swap(u, v);
    out_[u] |= bit(v);
    in_[v] |= bit(u);
  }
}

std::uint64_t BitDigraph::all() const noexcept {
  return order_ == kMaxOrder ? ~std::uint64_t{0} : bit(order_) - 1;
}

std::uint64_t BitDigraph::trim(std::uint64_t alive) const noexcept {
  for (;;) {
    std::uint64_t keep = 0;
    for (auto rest = alive; rest; rest &= rest - 1) {
      auto v = lowest(rest);
      if ((out_[v] & alive) && (in_[v] & alive)) keep |= bit(v);
    }
    if (keep == alive) return alive;
    alive = keep;
  }
}

std::size_t BitDigraph::shortest_cycle(std::uint64_t alive, std::uint64_t& cycle) const noexcept {
  std::size_t best = 0;
  cycle = 0;
  std::uint64_t layers[kMaxOrder + 1];
  for (auto sources = alive; sources; sources &= sources - 1) {
    const auto s = lowest(sources);
    std::uint64_t reached = bit(s);
    layers[0] = bit(s);
    for (std::size_t len = 1; best == 0 || len < best; ++len) {
      std::uint64_t next = 0;
      for (auto f = layers[len - 1]; f; f &= f - 1) next |= out_[lowest(f)];
      next &= alive;
      if (next & bit(s)) {
        best = len;
        cycle = bit(s);
        auto at = s;
        for (std::size_t i = len - 1; i >= 1; --i) {
          at = lowest(layers[i] & in_[at]);
          cycle |= bit(at);
        }
        break;
      }
      next &= ~reached;
      if (!next) break;
      reached |= next;
      layers[len] = next;
    }
    if (best == 2) break;
  }
  return best;
}

bool BitDigraph::fvs_within(std::uint64_t alive, std::size_t budget) const noexcept {
  alive = trim(alive);
  std::uint64_t cycle = 0;
  if (shortest_cycle(alive, cycle) == 0) return true;
  if (budget == 0) return false;

  // Disjoint-cycle packing lower bound.
  std::size_t packed = 1;
  for (auto rest = trim(alive & ~cycle); packed <= budget; ++packed) {
    std::uint64_t other = 0;
    if (shortest_cycle(rest, other) == 0) break;
    rest = trim(rest & ~other);
  }
  if (packed > budget) return false;

  for (auto c = cycle; c; c &= c - 1)
    if (fvs_within(alive & ~bit(lowest(c)), budget - 1)) return true;
  return false;
}

std::size_t BitDigraph::min_fvs_size() const noexcept {
  std::size_t budget = 0;
  while (!fvs_within(all(), budget)) ++budget;
  return budget;
}

bool BitDigraph::has_acyclic_set_of_size(std::size_t k) const noexcept {
  if (k > order_) return false;
  return fvs_within(all(), order_ - k);
}

}  // namespace acyclic

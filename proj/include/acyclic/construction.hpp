#pragma once

// The extremal family D_f: oriented plane graphs of digirth g and order
// f(g-1)+1 whose minimum feedback vertex set has size exactly f.

#include <cstddef>
#include <vector>

#include "acyclic/digraph.hpp"
#include "acyclic/embedding.hpp"

namespace acyclic {

/// Claims about a constructed instance. Nothing here is trusted: tests and
/// the CLI re-derive every claim with the solvers.
struct ConstructionCertificate {
  OrientedGraph graph;
  PlaneEmbedding embedding;
  /// Designated pair: on `face`, and never together in a minimum FVS.
  Vertex x = 0;
  Vertex y = 1;
  FaceWalk face;
  std::size_t g = 3;
  std::size_t f = 1;
  std::size_t claimed_n = 0;
  std::size_t claimed_fvs = 0;
  std::size_t claimed_mas = 0;
  /// Recursion step that introduced each vertex (1 for the initial cycle).
  std::vector<std::size_t> level;
  /// Euler characteristic after each step, one entry per step.
  std::vector<int> step_euler;
};

/// Throws InvalidParameter unless g >= 3 and f >= 1.
ConstructionCertificate construct(std::size_t g, std::size_t f);

/// Adds isolated vertices up to n_target. Each one raises the largest
/// acyclic set by one and changes neither digirth nor planarity.
OrientedGraph pad_to_order(const ConstructionCertificate& cert, std::size_t n_target);

}  // namespace acyclic

#pragma once

// Exact feedback vertex set / acyclic set / induced forest solvers.
//
// The directed solvers search by iterative deepening on the deletion
// budget, branching over the vertices of a shortest remaining cycle.
// Vertices are masked rather than removed, so ids are stable throughout.

#include <cstddef>
#include <string_view>

#include "acyclic/digraph.hpp"

namespace acyclic {

enum class WitnessKind { fvs, acyclic_set, induced_forest };

std::string_view to_string(WitnessKind kind) noexcept;

struct SolverWitness {
  WitnessKind kind = WitnessKind::fvs;
  std::size_t size = 0;
  VertexSet set;
};

SolverWitness min_fvs(const Digraph& d);

/// Minimum FVS of d - excluded. Excluded vertices never enter the witness.
SolverWitness min_fvs(const Digraph& d, const VertexSet& excluded);

/// Complement of min_fvs(d).
SolverWitness max_acyclic_set(const Digraph& d);

/// Budgeted decision: some FVS of size <= n - k exists. Stops at the first
/// feasible leaf. Throws InvalidParameter when k > n.
bool has_acyclic_set_of_size(const Digraph& d, std::size_t k);

/// True iff some minimum FVS contains both x and y.
bool pair_in_some_min_fvs(const Digraph& d, Vertex x, Vertex y);

/// Exhaustive search by increasing subset size. Guarded to n <= 24.
SolverWitness brute_force_min_fvs(const Digraph& d);

inline constexpr std::size_t kBruteForceLimit = 24;

/// Maximum vertex set inducing a forest, via undirected cycle branching.
SolverWitness max_induced_forest(const UndirectedGraph& g);

bool is_induced_forest(const UndirectedGraph& g, const VertexSet& s);

/// Re-checks a witness against its kind's defining property and its size.
bool verify_witness(const Digraph& d, const SolverWitness& w);
bool verify_witness(const UndirectedGraph& g, const SolverWitness& w);

}  // namespace acyclic

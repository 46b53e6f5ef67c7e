#pragma once

// Text edge lists and DOT output.
//
// Edge-list format: a line "n m", then m lines "u v", 0-indexed. For a
// digraph each line is the arc u -> v; for an undirected graph, the edge uv.

#include <iosfwd>
#include <string>

#include "acyclic/construction.hpp"
#include "acyclic/digraph.hpp"

namespace acyclic {

/// Throws ParseError with the byte offset of the offending line.
Digraph read_edge_list(std::istream& in);
UndirectedGraph read_undirected_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Digraph& d);

/// DOT rendering of a constructed instance. The designated pair is filled,
/// the initial cycle is labelled v_i and the path added at step t is
/// labelled s_1^(t) ... s_{g-1}^(t).
std::string to_dot(const ConstructionCertificate& cert);

}  // namespace acyclic

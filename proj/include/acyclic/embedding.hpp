#pragma once

// Combinatorial embeddings given by rotation systems.
//
// Edge e = (a, b) yields two darts: 2e runs a -> b and 2e + 1 runs b -> a.
// rotation(v) is the cyclic order of darts leaving v. Faces are traced with
// next(d) = successor of reverse(d) in the rotation at head(d).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "acyclic/digraph.hpp"

namespace acyclic {

struct Dart {
  std::uint32_t id = 0;

  std::uint32_t edge() const noexcept { return id >> 1; }
  Dart reversed() const noexcept { return Dart{id ^ 1U}; }
  friend bool operator==(Dart, Dart) = default;

  static Dart forward(std::uint32_t edge) { return Dart{edge << 1}; }
  static Dart backward(std::uint32_t edge) { return Dart{(edge << 1) | 1U}; }
};

struct FaceWalk {
  std::vector<Dart> darts;
  /// Tail of each dart, in walk order.
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return darts.size(); }
  bool contains(Vertex v) const noexcept;
  bool contains(Dart d) const noexcept;
};

using Rotation = std::vector<std::vector<Dart>>;

/// Partitions all darts into face walks. Throws InvalidEmbedding if some
/// dart is missing from, duplicated in, or misplaced in the rotation.
std::vector<FaceWalk> trace_faces(std::size_t order, std::span<const Edge> edges,
                                  const Rotation& rotation);

class PlaneEmbedding {
 public:
  PlaneEmbedding() = default;
  /// Edges keep their given direction; it fixes which dart is forward.
  PlaneEmbedding(std::size_t order, std::vector<Edge> edges, Rotation rotation);

  /// Builds darts from cyclic neighbour lists (planar_code style). Edge ids
  /// are assigned in order of first appearance, oriented low id to high id.
  static PlaneEmbedding from_neighbor_lists(const std::vector<std::vector<Vertex>>& neighbors);

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Dart> rotation(Vertex v) const noexcept { return rotation_[v]; }
  const Rotation& rotations() const noexcept { return rotation_; }
  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }

  Vertex tail(Dart d) const noexcept;
  Vertex head(Dart d) const noexcept;
  /// Index into faces() of the face containing d.
  std::size_t face_of(Dart d) const noexcept { return face_index_[d.id]; }
  /// Forward dart of the edge tail -> head; throws InvalidInput if absent.
  Dart dart(Vertex tail, Vertex head) const;
  /// Neighbours of v in rotation order.
  std::vector<Vertex> neighbor_cycle(Vertex v) const;

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  Rotation rotation_;
  std::vector<FaceWalk> faces_;
  std::vector<std::size_t> face_index_;
};

bool is_connected(const PlaneEmbedding& e);

/// V - E + F. Throws UnsupportedInput for a disconnected underlying graph.
int euler_characteristic(const PlaneEmbedding& e);

struct PathInsertion {
  PlaneEmbedding embedding;
  /// s_1, ..., s_k as new vertex ids.
  std::vector<Vertex> path;
  /// The four faces replacing the target face, in the order
  /// (x, A, y, s_1), (y, B, x, s_k), (x, s_1, ..., s_k), (y, s_1, ..., s_k)
  /// where A and B are the boundary pieces from x to y and back.
  std::vector<FaceWalk> new_faces;
};

/// Draws a path s_1..s_k inside `face`, joined by edges x-s_1, y-s_1, s_k-x
/// and s_k-y, in that edge-id order after the path edges s_i-s_{i+1}.
/// New edges are directed as listed (s_i -> s_{i+1}, x -> s_1, y -> s_1,
/// s_k -> x, s_k -> y).
PathInsertion insert_path_in_face(const PlaneEmbedding& e, const FaceWalk& face, Vertex x,
                                  Vertex y, std::size_t k);

}  // namespace acyclic

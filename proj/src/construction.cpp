#include "acyclic/construction.hpp"

#include <string>

#include "acyclic/errors.hpp"

namespace acyclic {

ConstructionCertificate construct(std::size_t g, std::size_t f) {
  if (g < 3) throw InvalidParameter("g must be at least 3, got " + std::to_string(g));
  if (f < 1) throw InvalidParameter("f must be at least 1, got " + std::to_string(f));

  // D_1: the directed cycle 0 -> 1 -> ... -> g-1 -> 0.
  std::vector<Edge> edges;
  Rotation rotation(g);
  for (Vertex v = 0; v < g; ++v) {
    const auto next = static_cast<Vertex>((v + 1) % g);
    edges.emplace_back(v, next);
    rotation[v].push_back(Dart::forward(v));
    rotation[next].push_back(Dart::backward(v));
  }
  PlaneEmbedding embedding(g, std::move(edges), std::move(rotation));

  ConstructionCertificate cert;
  cert.g = g;
  cert.f = f;
  cert.x = 0;
  cert.y = 1;
  cert.face = embedding.faces()[embedding.face_of(Dart::forward(0))];
  cert.level.assign(g, 1);
  cert.step_euler.push_back(euler_characteristic(embedding));

  for (std::size_t step = 2; step <= f; ++step) {
    auto inserted = insert_path_in_face(embedding, cert.face, cert.x, cert.y, g - 1);
    embedding = std::move(inserted.embedding);
    cert.level.resize(embedding.order(), step);
    cert.x = inserted.path[0];
    cert.y = inserted.path[1];
    cert.face = std::move(inserted.new_faces[2]);
    cert.step_euler.push_back(euler_characteristic(embedding));
  }

  // Every embedding edge already carries its arc direction.
  std::vector<Arc> arcs(embedding.edges().begin(), embedding.edges().end());
  cert.graph = OrientedGraph(embedding.order(), std::move(arcs));
  cert.embedding = std::move(embedding);
  cert.claimed_n = f * (g - 1) + 1;
  cert.claimed_fvs = f;
  cert.claimed_mas = f * (g - 2) + 1;
  return cert;
}

OrientedGraph pad_to_order(const ConstructionCertificate& cert, std::size_t n_target) {
  if (n_target < cert.graph.order())
    throw InvalidParameter("target order " + std::to_string(n_target) + " below instance order " +
                           std::to_string(cert.graph.order()));
  std::vector<Arc> arcs(cert.graph.arcs().begin(), cert.graph.arcs().end());
  return OrientedGraph(n_target, std::move(arcs));
}

}  // namespace acyclic

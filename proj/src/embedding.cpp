#include "acyclic/embedding.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "acyclic/errors.hpp"

namespace acyclic {

namespace {

constexpr std::size_t kNoFace = std::numeric_limits<std::size_t>::max();

Vertex dart_tail(std::span<const Edge> edges, Dart d) {
  const auto& [a, b] = edges[d.edge()];
  return (d.id & 1U) ? b : a;
}

Vertex dart_head(std::span<const Edge> edges, Dart d) {
  const auto& [a, b] = edges[d.edge()];
  return (d.id & 1U) ? a : b;
}

// position[dart] = index of the dart within its tail's rotation.
std::vector<std::size_t> rotation_positions(std::size_t order, std::span<const Edge> edges,
                                            const Rotation& rotation) {
  if (rotation.size() != order)
    throw InvalidEmbedding("rotation lists " + std::to_string(rotation.size()) +
                           " vertices, expected " + std::to_string(order));
  std::vector<std::size_t> position(2 * edges.size(), kNoFace);
  for (Vertex v = 0; v < order; ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) {
      Dart d = rotation[v][i];
      if (d.edge() >= edges.size())
        throw InvalidEmbedding("dart " + std::to_string(d.id) + " refers to a missing edge");
      if (dart_tail(edges, d) != v)
        throw InvalidEmbedding("dart " + std::to_string(d.id) + " listed at vertex " +
                               std::to_string(v) + " but leaves vertex " +
                               std::to_string(dart_tail(edges, d)));
      if (position[d.id] != kNoFace)
        throw InvalidEmbedding("dart " + std::to_string(d.id) + " appears twice in the rotation");
      position[d.id] = i;
    }
  }
  for (std::size_t id = 0; id < position.size(); ++id)
    if (position[id] == kNoFace)
      throw InvalidEmbedding("dart " + std::to_string(id) + " missing from the rotation");
  return position;
}

}  // namespace

bool FaceWalk::contains(Vertex v) const noexcept {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool FaceWalk::contains(Dart d) const noexcept {
  return std::find(darts.begin(), darts.end(), d) != darts.end();
}

std::vector<FaceWalk> trace_faces(std::size_t order, std::span<const Edge> edges,
                                  const Rotation& rotation) {
  const auto position = rotation_positions(order, edges, rotation);
  std::vector<char> used(position.size(), 0);
  std::vector<FaceWalk> faces;
  for (std::uint32_t start = 0; start < position.size(); ++start) {
    if (used[start]) continue;
    FaceWalk face;
    Dart d{start};
    while (!used[d.id]) {
      used[d.id] = 1;
      face.darts.push_back(d);
      face.vertices.push_back(dart_tail(edges, d));
      Dart back = d.reversed();
      const auto& around = rotation[dart_tail(edges, back)];
      d = around[(position[back.id] + 1) % around.size()];
    }
    if (d.id != start) throw InvalidEmbedding("face walk does not close on its first dart");
    faces.push_back(std::move(face));
  }
  return faces;
}

PlaneEmbedding::PlaneEmbedding(std::size_t order, std::vector<Edge> edges, Rotation rotation)
    : order_(order), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  for (const auto& [a, b] : edges_)
    if (a >= order_ || b >= order_ || a == b)
      throw InvalidEmbedding("bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  faces_ = trace_faces(order_, edges_, rotation_);
  face_index_.assign(2 * edges_.size(), kNoFace);
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (Dart d : faces_[f].darts) face_index_[d.id] = f;
}

PlaneEmbedding PlaneEmbedding::from_neighbor_lists(
    const std::vector<std::vector<Vertex>>& neighbors) {
  const std::size_t order = neighbors.size();
  std::vector<Edge> edges;
  Rotation rotation(order);
  // Edge ids by first appearance; the reverse listing must find its match.
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> pending(order);
  for (Vertex v = 0; v < order; ++v) {
    for (Vertex w : neighbors[v]) {
      if (w >= order) throw InvalidEmbedding("neighbour " + std::to_string(w) + " out of range");
      auto& waiting = pending[v];
      auto it = std::find_if(waiting.begin(), waiting.end(),
                             [w](const auto& p) { return p.first == w; });
      if (it != waiting.end()) {
        rotation[v].push_back(Dart::backward(it->second));
        waiting.erase(it);
      } else {
        auto id = static_cast<std::uint32_t>(edges.size());
        edges.emplace_back(v, w);
        rotation[v].push_back(Dart::forward(id));
        pending[w].emplace_back(v, id);
      }
    }
  }
  for (Vertex v = 0; v < order; ++v)
    if (!pending[v].empty())
      throw InvalidEmbedding("adjacency of vertex " + std::to_string(v) + " is not symmetric");
  return PlaneEmbedding(order, std::move(edges), std::move(rotation));
}

Vertex PlaneEmbedding::tail(Dart d) const noexcept { return dart_tail(edges_, d); }
Vertex PlaneEmbedding::head(Dart d) const noexcept { return dart_head(edges_, d); }

Dart PlaneEmbedding::dart(Vertex t, Vertex h) const {
  if (t < order_)
    for (Dart d : rotation_[t])
      if (head(d) == h) return d;
  throw InvalidInput("no edge between " + std::to_string(t) + " and " + std::to_string(h));
}

std::vector<Vertex> PlaneEmbedding::neighbor_cycle(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(rotation_[v].size());
  for (Dart d : rotation_[v]) out.push_back(head(d));
  return out;
}

bool is_connected(const PlaneEmbedding& e) {
  if (e.order() == 0) return true;
  std::vector<char> seen(e.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : e.rotation(v)) {
      Vertex w = e.head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == e.order();
}

int euler_characteristic(const PlaneEmbedding& e) {
  if (!is_connected(e)) throw UnsupportedInput("euler characteristic needs a connected graph");
  return static_cast<int>(e.order()) - static_cast<int>(e.edge_count()) +
         static_cast<int>(e.faces().size());
}

PathInsertion insert_path_in_face(const PlaneEmbedding& e, const FaceWalk& face, Vertex x,
                                  Vertex y, std::size_t k) {
  if (k < 2) throw InvalidParameter("path length must be at least 2, got " + std::to_string(k));
  if (x == y) throw InvalidFace("path endpoints must be distinct vertices");
  if (face.darts.empty() || face.darts.size() != face.vertices.size())
    throw InvalidFace("empty face walk");
  if (face.darts.front().id >= 2 * e.edge_count()) throw InvalidFace("face dart out of range");
  const auto& own = e.faces()[e.face_of(face.darts.front())];
  if (own.darts.size() != face.darts.size() ||
      !std::all_of(face.darts.begin(), face.darts.end(), [&](Dart d) { return own.contains(d); }))
    throw InvalidFace("walk is not a face of this embedding");

  auto corner = [&](Vertex v) {
    auto it = std::find(face.vertices.begin(), face.vertices.end(), v);
    if (it == face.vertices.end())
      throw InvalidFace("vertex " + std::to_string(v) + " does not lie on the face");
    auto i = static_cast<std::size_t>(it - face.vertices.begin());
    // The face passes v between reverse(incoming) and outgoing in v's rotation.
    return face.darts[(i + face.darts.size() - 1) % face.darts.size()].reversed();
  };
  const Dart x_before = corner(x);
  const Dart y_before = corner(y);

  const auto base = static_cast<Vertex>(e.order());
  const auto first_new = static_cast<std::uint32_t>(e.edge_count());
  std::vector<Vertex> path(k);
  for (std::size_t i = 0; i < k; ++i) path[i] = base + static_cast<Vertex>(i);
  const Vertex s1 = path.front();
  const Vertex sk = path.back();

  std::vector<Edge> edges(e.edges().begin(), e.edges().end());
  for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(path[i], path[i + 1]);
  const auto e_xs1 = static_cast<std::uint32_t>(edges.size());
  edges.emplace_back(x, s1);
  const auto e_ys1 = static_cast<std::uint32_t>(edges.size());
  edges.emplace_back(y, s1);
  const auto e_skx = static_cast<std::uint32_t>(edges.size());
  edges.emplace_back(sk, x);
  const auto e_sky = static_cast<std::uint32_t>(edges.size());
  edges.emplace_back(sk, y);

  Rotation rotation = e.rotations();
  rotation.resize(e.order() + k);
  auto splice_after = [&](Vertex v, Dart anchor, std::initializer_list<Dart> darts) {
    auto& around = rotation[v];
    auto it = std::find(around.begin(), around.end(), anchor);
    around.insert(it + 1, darts);
  };
  splice_after(x, x_before, {Dart::backward(e_skx), Dart::forward(e_xs1)});
  splice_after(y, y_before, {Dart::forward(e_ys1), Dart::backward(e_sky)});

  auto path_edge = [&](std::size_t i) { return first_new + static_cast<std::uint32_t>(i); };
  rotation[s1] = {Dart::backward(e_ys1), Dart::backward(e_xs1), Dart::forward(path_edge(0))};
  for (std::size_t i = 1; i + 1 < k; ++i)
    rotation[path[i]] = {Dart::backward(path_edge(i - 1)), Dart::forward(path_edge(i))};
  rotation[sk] = {Dart::forward(e_skx), Dart::forward(e_sky), Dart::backward(path_edge(k - 2))};

  PathInsertion result{PlaneEmbedding(e.order() + k, std::move(edges), std::move(rotation)),
                       std::move(path),
                       {}};
  const auto& emb = result.embedding;
  for (Dart d : {Dart::backward(e_xs1), Dart::backward(e_skx), Dart::forward(e_xs1),
                 Dart::backward(e_sky)})
    result.new_faces.push_back(emb.faces()[emb.face_of(d)]);
  return result;
}

}  // namespace acyclic

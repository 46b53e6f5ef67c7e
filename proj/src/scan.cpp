#include "acyclic/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>

#include "acyclic/bit_kernel.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/solvers.hpp"

namespace acyclic {

namespace {

constexpr int kEnd = -1;

void guard_sweep(const UndirectedGraph& g, const SweepOptions& options) {
  if (g.edge_count() > kSweepEdgeGuard && !options.allow_large)
    throw ResourceGuard("orientation sweep over " + std::to_string(g.edge_count()) +
                        " edges exceeds the " + std::to_string(kSweepEdgeGuard) +
                        "-edge guard");
  if (g.order() > BitDigraph::kMaxOrder)
    throw ResourceGuard("orientation sweep supports at most 64 vertices");
}

void merge(SweepResult& into, const SweepResult& part) {
  into.orientations += part.orientations;
  into.all_meet_threshold = into.all_meet_threshold && part.all_meet_threshold;
  if (part.min_mas && (!into.min_mas || *part.min_mas < *into.min_mas)) into.min_mas = part.min_mas;
}

}  // namespace

PlanarCodeReader::PlanarCodeReader(std::istream& in)
    : PlanarCodeReader(std::string(std::istreambuf_iterator<char>(in), {})) {}

PlanarCodeReader::PlanarCodeReader(std::string bytes) : bytes_(std::move(bytes)) {
  if (bytes_.compare(0, kPlanarCodeHeader.size(), kPlanarCodeHeader) == 0) {
    header_ = true;
    offset_ = kPlanarCodeHeader.size();
  }
}

int PlanarCodeReader::get() {
  if (offset_ >= bytes_.size()) return kEnd;
  return static_cast<unsigned char>(bytes_[offset_++]);
}

std::optional<EmbeddedGraph> PlanarCodeReader::next() {
  const std::size_t record = offset_;
  const int order = get();
  if (order == kEnd) return std::nullopt;
  if (order == 0)
    throw ParseError(record, "record with order 0 (16-bit planar_code is not supported)");

  std::vector<std::vector<Vertex>> neighbors(static_cast<std::size_t>(order));
  std::vector<std::vector<std::size_t>> where(neighbors.size());
  for (Vertex v = 0; v < neighbors.size(); ++v) {
    for (;;) {
      const std::size_t at = offset_;
      const int byte = get();
      if (byte == kEnd)
        throw ParseError(at, "truncated record starting at offset " + std::to_string(record));
      if (byte == 0) break;
      if (byte > order)
        throw ParseError(at, "neighbour " + std::to_string(byte) + " exceeds order " +
                                 std::to_string(order));
      const auto w = static_cast<Vertex>(byte - 1);
      if (w == v) throw ParseError(at, "loop at vertex " + std::to_string(byte));
      if (std::find(neighbors[v].begin(), neighbors[v].end(), w) != neighbors[v].end())
        throw ParseError(at, "repeated neighbour " + std::to_string(byte));
      neighbors[v].push_back(w);
      where[v].push_back(at);
    }
  }
  for (Vertex v = 0; v < neighbors.size(); ++v)
    for (std::size_t i = 0; i < neighbors[v].size(); ++i) {
      const auto& back = neighbors[neighbors[v][i]];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw ParseError(where[v][i], "asymmetric adjacency between " + std::to_string(v + 1) +
                                          " and " + std::to_string(neighbors[v][i] + 1));
    }
  return embedded_from_rotation(neighbors);
}

std::vector<EmbeddedGraph> read_planar_code(std::istream& in, bool* had_header) {
  PlanarCodeReader reader(in);
  std::vector<EmbeddedGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  if (had_header) *had_header = reader.has_header();
  return out;
}

std::vector<EmbeddedGraph> read_planar_code_file(const std::filesystem::path& path,
                                                 bool* had_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_planar_code(in, had_header);
}

void write_planar_code(std::ostream& out, std::span<const EmbeddedGraph> graphs, bool header) {
  if (header) out << kPlanarCodeHeader;
  for (const auto& g : graphs) {
    const auto n = g.embedding.order();
    if (n == 0 || n > 255) throw InvalidInput("planar_code records need 1 <= n <= 255");
    out.put(static_cast<char>(n));
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.embedding.neighbor_cycle(v)) out.put(static_cast<char>(w + 1));
      out.put('\0');
    }
  }
}

EmbeddedGraph embedded_from_rotation(const std::vector<std::vector<Vertex>>& neighbors) {
  auto embedding = PlaneEmbedding::from_neighbor_lists(neighbors);
  std::vector<Edge> edges(embedding.edges().begin(), embedding.edges().end());
  return EmbeddedGraph{UndirectedGraph(neighbors.size(), std::move(edges)), std::move(embedding)};
}

bool is_triangulation(const EmbeddedGraph& g) {
  const auto n = g.graph.order();
  if (n < 3 || !is_connected(g.embedding)) return false;
  if (g.graph.edge_count() != g.embedding.edge_count()) return false;
  if (g.graph.edge_count() != 3 * n - 6) return false;
  for (const auto& face : g.embedding.faces())
    if (face.length() != 3) return false;
  return euler_characteristic(g.embedding) == 2;
}

bool is_tight(const UndirectedGraph& g) {
  const auto n = g.order();
  return n % 2 == 0 && 2 * max_induced_forest(g).size == n;
}

std::vector<EmbeddedGraph> find_tight(std::span<const EmbeddedGraph> graphs) {
  std::vector<EmbeddedGraph> out;
  for (const auto& g : graphs)
    if (is_tight(g.graph)) out.push_back(g);
  return out;
}

SweepResult sweep_range(const UndirectedGraph& g, std::size_t threshold, std::uint64_t begin,
                        std::uint64_t end, const SweepOptions& options) {
  guard_sweep(g, options);
  end = std::min(end, OrientationCursor::domain_size(g.edge_count(), options.dedup_reversal));
  SweepResult result;
  if (begin >= end) return result;

  const auto lo = static_cast<std::int64_t>(begin);
  const auto hi = static_cast<std::int64_t>(end);
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const bool exact = options.exact;
  std::size_t min_mas = std::numeric_limits<std::size_t>::max();
  int all_meet = 1;

#pragma omp parallel for schedule(dynamic, 256) num_threads(threads) \
    reduction(min : min_mas) reduction(&& : all_meet)
  for (std::int64_t mask = lo; mask < hi; ++mask) {
    const BitDigraph d(g, static_cast<std::uint64_t>(mask));
    if (exact) {
      const auto mas = d.max_acyclic_set_size();
      min_mas = std::min(min_mas, mas);
      all_meet = all_meet && mas >= threshold;
    } else {
      all_meet = all_meet && d.has_acyclic_set_of_size(threshold);
    }
  }

  result.orientations = end - begin;
  result.all_meet_threshold = all_meet != 0;
  if (exact) result.min_mas = min_mas;
  return result;
}

SweepResult orientation_sweep(const UndirectedGraph& g, std::size_t threshold,
                              const SweepOptions& options) {
  return sweep_range(g, threshold, 0, std::numeric_limits<std::uint64_t>::max(), options);
}

SweepResult orientation_sweep_serial(const UndirectedGraph& g, std::size_t threshold,
                                     const SweepOptions& options) {
  guard_sweep(g, options);
  SweepResult result;
  OrientationCursor cursor(g, options.dedup_reversal);
  while (auto d = cursor.next()) {
    ++result.orientations;
    if (options.exact) {
      const auto mas = max_acyclic_set(*d).size;
      if (!result.min_mas || mas < *result.min_mas) result.min_mas = mas;
      if (mas < threshold) result.all_meet_threshold = false;
    } else if (threshold > d->order() || !has_acyclic_set_of_size(*d, threshold)) {
      result.all_meet_threshold = false;
    }
  }
  return result;
}

SweepCheckpoint::SweepCheckpoint(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<SweepCheckpoint::State> SweepCheckpoint::load(const std::string& graph_id) const {
  std::ifstream in(path_);
  std::string line;
  std::optional<State> found;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string id;
    State state;
    int all_meet = 1;
    long long min_mas = -1;
    if (!(fields >> id >> state.next_mask >> all_meet >> min_mas)) continue;
    if (id != graph_id) continue;
    state.all_meet = all_meet != 0;
    if (min_mas >= 0) state.min_mas = static_cast<std::size_t>(min_mas);
    found = state;
  }
  return found;
}

void SweepCheckpoint::store(const std::string& graph_id, const State& state) {
  if (graph_id.empty() || graph_id.find_first_of(" \t\n") != std::string::npos)
    throw InvalidInput("checkpoint ids must be non-empty and free of whitespace");
  std::vector<std::string> kept;
  {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string id;
      if (fields >> id && id != graph_id) kept.push_back(line);
    }
  }
  std::ostringstream own;
  own << graph_id << ' ' << state.next_mask << ' ' << (state.all_meet ? 1 : 0) << ' '
      << (state.min_mas ? static_cast<long long>(*state.min_mas) : -1LL);
  kept.push_back(own.str());

  auto scratch = path_;
  scratch += ".tmp";
  {
    std::ofstream out(scratch, std::ios::trunc);
    for (const auto& line : kept) out << line << '\n';
    if (!out) throw InvalidInput("cannot write checkpoint " + scratch.string());
  }
  std::filesystem::rename(scratch, path_);
}

SweepResult resumable_sweep(const UndirectedGraph& g, std::size_t threshold,
                            const SweepOptions& options, SweepCheckpoint& checkpoint,
                            const std::string& graph_id, std::uint64_t block) {
  guard_sweep(g, options);
  if (block == 0) throw InvalidParameter("checkpoint block must be positive");
  const auto domain = OrientationCursor::domain_size(g.edge_count(), options.dedup_reversal);
  auto state = checkpoint.load(graph_id).value_or(SweepCheckpoint::State{});

  SweepResult total;
  total.orientations = std::min(state.next_mask, domain);
  total.all_meet_threshold = state.all_meet;
  total.min_mas = state.min_mas;
  while (state.next_mask < domain) {
    const auto stop = std::min(domain, state.next_mask + block);
    merge(total, sweep_range(g, threshold, state.next_mask, stop, options));
    state = SweepCheckpoint::State{stop, total.all_meet_threshold, total.min_mas};
    checkpoint.store(graph_id, state);
  }
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void record_sweep(ScanEntry& entry, const UndirectedGraph& g, const SweepOptions& options) {
  auto result = orientation_sweep(g, entry.threshold, options);
  entry.orientations = result.orientations;
  entry.min_mas = result.min_mas;
  entry.holds = result.all_meet_threshold;
}

}  // namespace

ScanEntry scan_graph(const UndirectedGraph& g, const SweepOptions& options, bool run_sweep) {
  const auto start = Clock::now();
  ScanEntry entry;
  entry.n = g.order();
  entry.m = g.edge_count();
  entry.forest = max_induced_forest(g).size;
  entry.tight = entry.n % 2 == 0 && 2 * entry.forest == entry.n;
  entry.applicable = 2 * entry.forest <= entry.n;
  entry.threshold = entry.n / 2 + 1;
  if (entry.tight && run_sweep) record_sweep(entry, g, options);
  entry.seconds = seconds_since(start);
  return entry;
}

ScanEntry check_forest_gap(const UndirectedGraph& g, const SweepOptions& options) {
  const auto start = Clock::now();
  ScanEntry entry;
  entry.n = g.order();
  entry.m = g.edge_count();
  entry.forest = max_induced_forest(g).size;
  entry.tight = entry.n % 2 == 0 && 2 * entry.forest == entry.n;
  entry.applicable = 2 * entry.forest <= entry.n;
  entry.threshold = entry.forest + 1;
  if (entry.applicable) record_sweep(entry, g, options);
  entry.seconds = seconds_since(start);
  return entry;
}

nlohmann::json to_json(const ScanEntry& entry) {
  nlohmann::json j;
  j["n"] = entry.n;
  j["m"] = entry.m;
  j["forest"] = entry.forest;
  j["tight"] = entry.tight;
  j["applicable"] = entry.applicable;
  j["orientations"] = entry.orientations;
  j["min_mas"] = entry.min_mas ? nlohmann::json(*entry.min_mas) : nlohmann::json(nullptr);
  j["threshold"] = entry.threshold;
  j["holds"] = entry.holds ? nlohmann::json(*entry.holds) : nlohmann::json(nullptr);
  j["seconds"] = entry.seconds;
  return j;
}

}  // namespace acyclic

#pragma once

// Tight-example scan over planar triangulations: planar_code ingestion,
// tightness filter, orientation sweeps and the per-graph report.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "acyclic/digraph.hpp"
#include "acyclic/embedding.hpp"

namespace acyclic {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

struct EmbeddedGraph {
  UndirectedGraph graph;
  PlaneEmbedding embedding;
};

/// Sequential planar_code decoder. Each record is one byte n followed by
/// the 1-based clockwise neighbour list of every vertex, each list closed
/// by a 0 byte. The header is optional.
class PlanarCodeReader {
 public:
  /// Consumes the whole stream.
  explicit PlanarCodeReader(std::istream& in);
  explicit PlanarCodeReader(std::string bytes);

  /// Next graph, or nullopt at a clean end of input. Throws ParseError
  /// carrying the byte offset of the offending byte.
  std::optional<EmbeddedGraph> next();

  bool has_header() const noexcept { return header_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  int get();

  std::string bytes_;
  bool header_ = false;
  std::size_t offset_ = 0;
};

std::vector<EmbeddedGraph> read_planar_code(std::istream& in, bool* had_header = nullptr);
std::vector<EmbeddedGraph> read_planar_code_file(const std::filesystem::path& path,
                                                 bool* had_header = nullptr);

/// Writes records in rotation order, so a read/write cycle is bit-exact.
void write_planar_code(std::ostream& out, std::span<const EmbeddedGraph> graphs, bool header);

EmbeddedGraph embedded_from_rotation(const std::vector<std::vector<Vertex>>& neighbors);

bool is_triangulation(const EmbeddedGraph& g);

/// Even order and maximum induced forest of exactly n/2 vertices.
bool is_tight(const UndirectedGraph& g);
std::vector<EmbeddedGraph> find_tight(std::span<const EmbeddedGraph> graphs);

struct SweepOptions {
  bool dedup_reversal = true;
  /// Also compute the exact minimum over orientations of the largest
  /// acyclic set; otherwise each orientation stops at the threshold.
  bool exact = false;
  /// Lift the 30-edge guard.
  bool allow_large = false;
  /// OpenMP worker count for the parallel kernel; 0 keeps the runtime default.
  int jobs = 0;
};

struct SweepResult {
  std::uint64_t orientations = 0;
  bool all_meet_threshold = true;
  std::optional<std::size_t> min_mas;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

inline constexpr std::size_t kSweepEdgeGuard = 30;

/// Parallel sweep over the orientation masks [begin, end) using the bitset
/// kernel. Results are independent of the worker count.
SweepResult sweep_range(const UndirectedGraph& g, std::size_t threshold, std::uint64_t begin,
                        std::uint64_t end, const SweepOptions& options);

/// Full sweep, OpenMP-parallel.
SweepResult orientation_sweep(const UndirectedGraph& g, std::size_t threshold,
                              const SweepOptions& options = {});

/// Serial reference: materialises each orientation and calls the generic
/// Digraph solvers.
SweepResult orientation_sweep_serial(const UndirectedGraph& g, std::size_t threshold,
                                     const SweepOptions& options = {});

/// Plain-text progress file: one line per graph id,
/// "<id> <next-mask> <all-meet 0|1> <min-mas or -1>".
class SweepCheckpoint {
 public:
  struct State {
    std::uint64_t next_mask = 0;
    bool all_meet = true;
    std::optional<std::size_t> min_mas;
  };

  explicit SweepCheckpoint(std::filesystem::path path);

  std::optional<State> load(const std::string& graph_id) const;
  void store(const std::string& graph_id, const State& state);

 private:
  std::filesystem::path path_;
};

/// Sweep in fixed-size mask blocks, persisting progress after each block
/// and resuming from any progress already recorded for `graph_id`.
SweepResult resumable_sweep(const UndirectedGraph& g, std::size_t threshold,
                            const SweepOptions& options, SweepCheckpoint& checkpoint,
                            const std::string& graph_id, std::uint64_t block = 1U << 16);

struct ScanEntry {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t forest = 0;
  bool tight = false;
  /// forest <= n/2, so the forest-gap check was run.
  bool applicable = false;
  std::size_t threshold = 0;
  std::uint64_t orientations = 0;
  std::optional<std::size_t> min_mas;
  std::optional<bool> holds;
  double seconds = 0.0;
};

/// Forest size and tightness; tight graphs are swept against n/2 + 1 when
/// `run_sweep` is set.
ScanEntry scan_graph(const UndirectedGraph& g, const SweepOptions& options, bool run_sweep);

/// Sweeps every orientation against threshold a + 1 where a is the largest
/// induced forest; not applicable (no sweep) when a > n/2.
ScanEntry check_forest_gap(const UndirectedGraph& g, const SweepOptions& options = {});

nlohmann::json to_json(const ScanEntry& entry);

}  // namespace acyclic

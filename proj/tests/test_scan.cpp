#include <fstream>
#include <sstream>

#include "acyclic/errors.hpp"
#include "acyclic/scan.hpp"
#include "acyclic/solvers.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace acyclic;

namespace {

std::string k4_bytes(bool header) {
  std::string s = header ? std::string(kPlanarCodeHeader) : std::string();
  const unsigned char body[] = {4, 2, 4, 3, 0, 3, 4, 1, 0, 1, 4, 2, 0, 1, 2, 3, 0};
  s.append(reinterpret_cast<const char*>(body), sizeof body);
  return s;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t parse_error_offset(const std::string& bytes) {
  PlanarCodeReader reader(bytes);
  try {
    while (reader.next()) {
    }
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

// Oracle tightness: forest by subset enumeration.
bool oracle_tight(const UndirectedGraph& g) {
  return g.order() % 2 == 0 && 2 * oracle::max_induced_forest(g) == g.order();
}

}  // namespace

TEST_CASE("planar_code K4 record") {
  for (bool header : {true, false}) {
    PlanarCodeReader reader(k4_bytes(header));
    const auto g = reader.next();
    REQUIRE(g.has_value());
    CHECK(reader.has_header() == header);
    CHECK(g->graph.order() == 4);
    CHECK(g->graph.edge_count() == 6);
    REQUIRE(g->embedding.faces().size() == 4);
    for (const auto& f : g->embedding.faces()) CHECK(f.length() == 3);
    CHECK_FALSE(reader.next().has_value());
  }
  PlanarCodeReader only_header{std::string(kPlanarCodeHeader)};
  CHECK_FALSE(only_header.next().has_value());
  PlanarCodeReader empty{std::string()};
  CHECK_FALSE(empty.next().has_value());
}

TEST_CASE("planar_code errors carry byte offsets") {
  const auto good = k4_bytes(true);
  const auto h = kPlanarCodeHeader.size();
  // Truncated at every interior position: the offset is the end of input.
  for (std::size_t cut = h + 1; cut < good.size(); ++cut)
    CHECK(parse_error_offset(good.substr(0, cut)) == cut);

  auto out_of_range = good;
  out_of_range[h + 2] = 5;
  CHECK(parse_error_offset(out_of_range) == h + 2);

  auto loop = good;
  loop[h + 1] = 1;
  CHECK(parse_error_offset(loop) == h + 1);

  // Vertex 4 lists 1, 2, 1: repeated neighbour.
  auto repeated = good;
  repeated[h + 15] = 1;
  CHECK(parse_error_offset(repeated) == h + 15);

  // 1-2 and 3-1 only in one direction.
  const unsigned char asym[] = {3, 2, 3, 0, 1, 0, 2, 0};
  const std::string asym_bytes(reinterpret_cast<const char*>(asym), sizeof asym);
  CHECK(parse_error_offset(asym_bytes) != std::string::npos);

  const std::string zero_order(1, '\0');
  CHECK(parse_error_offset(zero_order) == 0);
}

TEST_CASE("fixtures round-trip bit-exactly") {
  const std::pair<const char*, std::size_t> files[] = {{"triangulations_n04.pc", 1},
                                                       {"triangulations_n06.pc", 2},
                                                       {"triangulations_n08.pc", 14},
                                                       {"triangulations_n10.pc", 233}};
  for (const auto& [name, count] : files) {
    CAPTURE(name);
    bool header = false;
    const auto graphs = read_planar_code_file(oracle::fixture(name), &header);
    CHECK(header);
    CHECK(graphs.size() == count);
    std::ostringstream out;
    write_planar_code(out, graphs, header);
    CHECK(out.str() == slurp(oracle::fixture(name)));
    for (const auto& g : graphs) {
      CHECK(is_triangulation(g));
      CHECK(g.graph.edge_count() == 3 * g.graph.order() - 6);
    }
  }
}

TEST_CASE("triangulation recogniser") {
  PlanarCodeReader k4(k4_bytes(false));
  CHECK(is_triangulation(*k4.next()));

  std::vector<std::vector<Vertex>> octa(6);
  // Vertex i is opposite i+3; the rotation lists the 4-cycle around it.
  octa[0] = {1, 2, 4, 5};
  octa[3] = {1, 5, 4, 2};
  octa[1] = {0, 5, 3, 2};
  octa[4] = {0, 2, 3, 5};
  octa[2] = {0, 1, 3, 4};
  octa[5] = {0, 4, 3, 1};
  const auto o = embedded_from_rotation(octa);
  CHECK(o.graph.edge_count() == 12);
  CHECK(is_triangulation(o));

  const auto c4 = embedded_from_rotation({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
  CHECK_FALSE(is_triangulation(c4));
}

TEST_CASE("tightness filter agrees with enumeration") {
  CHECK(is_tight(oracle::complete_graph(4)));
  CHECK(is_tight(oracle::octahedron()));
  CHECK_FALSE(is_tight(oracle::complete_graph(3)));
  for (const char* name : {"triangulations_n06.pc", "triangulations_n08.pc"}) {
    const auto graphs = read_planar_code_file(oracle::fixture(name));
    std::size_t tight = 0;
    for (const auto& g : graphs) {
      CHECK(is_tight(g.graph) == oracle_tight(g.graph));
      tight += oracle_tight(g.graph) ? 1 : 0;
    }
    CHECK(find_tight(graphs).size() == tight);
  }
}

TEST_CASE("orientation sweeps on small graphs") {
  // Every orientation of K4 has an acyclic set of size 3; same for 4 in the octahedron.
  auto k4 = orientation_sweep(oracle::complete_graph(4), 3, {.exact = true});
  CHECK(k4.all_meet_threshold);
  CHECK(k4.orientations == 32);
  CHECK(k4.min_mas == 3);

  auto octa = orientation_sweep(oracle::octahedron(), 4, {.exact = true});
  CHECK(octa.all_meet_threshold);
  CHECK(octa.orientations == 2048);
  CHECK(octa.min_mas == 4);

  // The cyclic orientation of a triangle has no acyclic set of size 3.
  auto tri = orientation_sweep(oracle::complete_graph(3), 3);
  CHECK_FALSE(tri.all_meet_threshold);
}

TEST_CASE("reversal dedup is sound") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracle::random_graph(rng, 7, 3);
    if (g.edge_count() > 12 || g.edge_count() == 0) continue;
    const auto t = 1 + g.order() / 2;
    const auto half = orientation_sweep(g, t, {.dedup_reversal = true, .exact = true});
    const auto all = orientation_sweep(g, t, {.dedup_reversal = false, .exact = true});
    CHECK(half.min_mas == all.min_mas);
    CHECK(half.all_meet_threshold == all.all_meet_threshold);
    CHECK(2 * half.orientations == all.orientations);

    // Exhaustive oracle over all orientations.
    std::size_t worst = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
      worst = std::min(worst, oracle::max_acyclic_set(orient(g, mask)));
    CHECK(all.min_mas == worst);
  }
}

TEST_CASE("parallel and serial sweeps agree") {
  const auto graphs = read_planar_code_file(oracle::fixture("triangulations_n08.pc"));
  for (std::size_t i = 0; i < graphs.size(); i += 3) {
    const auto& g = graphs[i].graph;
    const auto t = 1 + g.order() / 2;
    const auto serial = orientation_sweep_serial(g, t, {.exact = true});
    for (int jobs : {1, 2, 4}) {
      const auto parallel = orientation_sweep(g, t, {.exact = true, .jobs = jobs});
      CHECK(parallel == serial);
    }
    CHECK(orientation_sweep(g, t, {.jobs = 2}).all_meet_threshold ==
          orientation_sweep_serial(g, t).all_meet_threshold);
  }
}

TEST_CASE("sweep edge guard") {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 31; ++v) edges.emplace_back(v, v + 1);
  const UndirectedGraph path(32, std::move(edges));
  CHECK_THROWS_AS(orientation_sweep(path, 2), ResourceGuard);
  CHECK_THROWS_AS(orientation_sweep_serial(path, 2), ResourceGuard);
}

TEST_CASE("forest-gap check") {
  const auto k4 = check_forest_gap(oracle::complete_graph(4));
  CHECK(k4.applicable);
  CHECK(k4.forest == 2);
  CHECK(k4.threshold == 3);
  CHECK(k4.holds == true);

  const auto octa = check_forest_gap(oracle::octahedron());
  CHECK(octa.applicable);
  CHECK(octa.threshold == 4);
  CHECK(octa.holds == true);

  const UndirectedGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto p = check_forest_gap(path);
  CHECK_FALSE(p.applicable);
  CHECK_FALSE(p.holds.has_value());
  CHECK(p.orientations == 0);
}

TEST_CASE("scan entries and JSON") {
  const auto e = scan_graph(oracle::octahedron(), {}, true);
  CHECK(e.n == 6);
  CHECK(e.m == 12);
  CHECK(e.forest == 3);
  CHECK(e.tight);
  CHECK(e.threshold == 4);
  CHECK(e.holds == true);
  const auto j = to_json(e);
  for (const char* key : {"n", "m", "forest", "tight", "threshold", "orientations", "holds"})
    CHECK(j.contains(key));
  CHECK(j["tight"] == true);

  const auto skipped = scan_graph(oracle::octahedron(), {}, false);
  CHECK(skipped.tight);
  CHECK_FALSE(skipped.holds.has_value());
  CHECK(to_json(skipped)["holds"].is_null());
}

TEST_CASE("checkpointed sweep resumes to the same result") {
  const auto dir = std::filesystem::temp_directory_path() / "acyclic_checkpoint_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "progress.txt";
  std::filesystem::remove(path);

  const auto g = oracle::octahedron();
  const SweepOptions opts{.exact = true};
  const auto whole = orientation_sweep(g, 4, opts);

  // Interrupted run: record progress up to mask 700, then resume.
  SweepCheckpoint cp(path);
  const auto first = sweep_range(g, 4, 0, 700, opts);
  cp.store("octa", {700, first.all_meet_threshold, first.min_mas});
  CHECK(cp.load("octa")->next_mask == 700);
  CHECK_FALSE(cp.load("other").has_value());

  SweepCheckpoint reopened(path);
  const auto resumed = resumable_sweep(g, 4, opts, reopened, "octa", 128);
  CHECK(resumed.all_meet_threshold == whole.all_meet_threshold);
  CHECK(resumed.min_mas == whole.min_mas);
  CHECK(reopened.load("octa")->next_mask == 2048);

  // A finished graph is not swept again.
  const auto again = resumable_sweep(g, 4, opts, reopened, "octa", 128);
  CHECK(again.min_mas == whole.min_mas);
  std::filesystem::remove_all(dir);
}

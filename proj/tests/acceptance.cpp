// Acceptance checks: one PASS/FAIL line per criterion, exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "acyclic/bounds.hpp"
#include "acyclic/construction.hpp"
#include "acyclic/embedding.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/scan.hpp"
#include "acyclic/solvers.hpp"
#include "oracles.hpp"

using namespace acyclic;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

void report(int id, bool ok, double seconds, double limit, const std::string& detail) {
  const bool pass = ok && seconds < limit;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", id,
              detail.c_str(), seconds, limit);
  std::fflush(stdout);
}

const char* const kFixtures[] = {"triangulations_n04.pc", "triangulations_n06.pc",
                                 "triangulations_n08.pc", "triangulations_n10.pc"};

void triangle_family() {
  const auto t = Clock::now();
  bool ok = true;
  std::string bad;
  for (std::size_t f = 1; f <= 10; ++f) {
    const auto c = construct(3, f);
    const auto n = static_cast<std::int64_t>(c.graph.order());
    const auto mas = max_acyclic_set(c.graph);
    const bool good = n == static_cast<std::int64_t>(2 * f + 1) && mas.size == f + 1 &&
                      static_cast<std::int64_t>(mas.size) == (n + 2) / 2 &&
                      verify_witness(c.graph, mas);
    if (!good) bad += " f=" + std::to_string(f);
    ok = ok && good;
  }
  report(1, ok, since(t), 30, "MAS(construct(3,f)) = f+1 for f=1..10" + bad);
}

void general_family() {
  const auto t = Clock::now();
  bool ok = true;
  bool pair_ok = true;
  std::string bad;
  for (std::size_t g = 3; g <= 8; ++g)
    for (std::size_t f = 1; f <= 4; ++f) {
      const auto c = construct(g, f);
      const auto n = static_cast<std::int64_t>(c.graph.order());
      const auto mas = max_acyclic_set(c.graph).size;
      bool euler = c.step_euler.size() == f;
      for (int chi : c.step_euler) euler = euler && chi == 2;
      euler = euler && euler_characteristic(c.embedding) == 2;
      const bool good = n == static_cast<std::int64_t>(f * (g - 1) + 1) &&
                        mas == f * (g - 2) + 1 &&
                        static_cast<std::int64_t>(mas) ==
                            theorem_bound(n, static_cast<std::int64_t>(g)) &&
                        digirth(c.graph) == g && euler;
      if (!good) bad += " (g=" + std::to_string(g) + ",f=" + std::to_string(f) + ")";
      ok = ok && good;
      pair_ok = pair_ok && !pair_in_some_min_fvs(c.graph, c.x, c.y);
    }
  const auto seconds = since(t);
  report(2, ok, seconds, 120, "MAS, digirth and per-step Euler for g=3..8, f=1..4" + bad);
  report(3, pair_ok, seconds, 120, "designated pair never shares a minimum FVS");
}

void oracle_corpus() {
  const auto t = Clock::now();
  std::mt19937_64 rng(20260101);
  bool fvs_ok = true;
  bool complement_ok = true;
  for (int i = 0; i < 200; ++i) {
    const auto d = oracle::random_digraph(rng, 12);
    const auto fvs = min_fvs(d);
    const auto mas = max_acyclic_set(d);
    fvs_ok = fvs_ok && fvs.size == brute_force_min_fvs(d).size && verify_witness(d, fvs);
    complement_ok = complement_ok && fvs.size + mas.size == d.order() &&
                    mas.size == max_acyclic_set(reverse(d)).size;
  }
  bool forest_ok = true;
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_graph(rng, 10);
    const auto w = max_induced_forest(g);
    forest_ok = forest_ok && w.size == oracle::max_induced_forest(g) && verify_witness(g, w);
  }
  const auto seconds = since(t);
  report(4, fvs_ok && forest_ok, seconds, 120,
         "min_fvs vs brute force (200 digraphs), forest vs enumeration (100 graphs)");
  report(5, complement_ok, seconds, 120, "fvs + mas = n and reversal invariance");
}

std::vector<UndirectedGraph> tight_count() {
  const auto t = Clock::now();
  std::vector<UndirectedGraph> tight;
  std::map<std::size_t, std::size_t> by_order;
  bool ingest_ok = true;
  for (const char* name : kFixtures) {
    for (const auto& g : read_planar_code_file(oracle::fixture(name))) {
      ingest_ok = ingest_ok && is_triangulation(g) && euler_characteristic(g.embedding) == 2;
      if (is_tight(g.graph)) {
        tight.push_back(g.graph);
        ++by_order[g.graph.order()];
      }
    }
  }
  std::string detail = "tight triangulations for n in {4,6,8,10}: " +
                       std::to_string(tight.size()) + " (expected 9; by n:";
  for (const auto& [n, k] : by_order) detail += " " + std::to_string(n) + "->" + std::to_string(k);
  detail += ")";
  report(6, ingest_ok && tight.size() == 9, since(t), 60, detail);
  return tight;
}

void tight_sweep(const std::vector<UndirectedGraph>& tight) {
  const auto t = Clock::now();
  bool ok = true;
  std::size_t swept = 0;
  std::uint64_t orientations = 0;
  for (const auto& g : tight) {
    if (g.order() > 8) continue;
    const auto r = orientation_sweep(g, g.order() / 2 + 1, {.dedup_reversal = true, .jobs = 4});
    ok = ok && r.all_meet_threshold;
    orientations += r.orientations;
    ++swept;
  }
  report(7, ok && swept > 0, since(t), 600,
         "every orientation of " + std::to_string(swept) + " tight graphs (n<=8, " +
             std::to_string(orientations) + " orientations) has MAS >= n/2+1");
}

void digirth_eight() {
  const auto t = Clock::now();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> dist(1, 1000000);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto n = i < 10 ? i + 1 : dist(rng);
    ok = ok && gr_bound(n, 8) >= Rational(3 * n, 5);
  }
  report(8, ok, since(t), 1, "gr_bound(n,8) >= 3n/5 at 1000 sampled n <= 10^6");
}

void format_fidelity() {
  const auto t = Clock::now();
  bool ok = true;
  for (const char* name : kFixtures) {
    std::ifstream in(oracle::fixture(name), std::ios::binary);
    const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::istringstream src(bytes);
    bool header = false;
    const auto graphs = read_planar_code(src, &header);
    std::ostringstream out;
    write_planar_code(out, graphs, header);
    ok = ok && out.str() == bytes;

    // Every cut inside the first record must report its own position.
    const auto& first = graphs.front().graph;
    const auto first_end =
        kPlanarCodeHeader.size() + 1 + 2 * first.edge_count() + first.order();
    for (std::size_t cut = kPlanarCodeHeader.size() + 1; cut < first_end; ++cut) {
      PlanarCodeReader reader(bytes.substr(0, cut));
      try {
        reader.next();
        ok = false;
      } catch (const ParseError& e) {
        ok = ok && e.offset() == cut;
      }
    }
  }
  report(9, ok, since(t), 60, "planar_code round trip and positioned truncation errors");
}

}  // namespace

int main() {
  triangle_family();
  general_family();
  oracle_corpus();
  const auto tight = tight_count();
  tight_sweep(tight);
  digirth_eight();
  format_fidelity();
  std::printf("%d criteria failed\n", failures);
  return failures;
}

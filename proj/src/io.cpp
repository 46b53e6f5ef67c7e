#include "acyclic/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "acyclic/errors.hpp"

namespace acyclic {

namespace {

struct RawEdgeList {
  std::size_t order = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

RawEdgeList parse(std::istream& in) {
  RawEdgeList raw;
  std::string line;
  std::size_t offset = 0;
  std::size_t line_start = 0;
  auto next_line = [&]() -> bool {
    while (true) {
      line_start = offset;
      if (!std::getline(in, line)) return false;
      offset += line.size() + 1;
      if (!blank(line)) return true;
    }
  };

  if (!next_line()) throw ParseError(0, "missing \"n m\" header line");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n >> m) || (header >> rest) || n < 0 || m < 0)
      throw ParseError(line_start, "expected \"n m\" with non-negative integers");
  }
  raw.order = static_cast<std::size_t>(n);
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      throw ParseError(offset, "expected " + std::to_string(m) + " edge lines, found " +
                                   std::to_string(i));
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0)
      throw ParseError(line_start, "expected \"u v\" with non-negative integers");
    if (u >= n || v >= n) throw ParseError(line_start, "endpoint out of range");
    if (u == v) throw ParseError(line_start, "loop at vertex " + std::to_string(u));
    raw.pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) throw ParseError(line_start, "trailing content after the last edge line");
  return raw;
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
  auto raw = parse(in);
  return Digraph(raw.order, std::move(raw.pairs));
}

UndirectedGraph read_undirected_edge_list(std::istream& in) {
  auto raw = parse(in);
  return UndirectedGraph(raw.order, std::move(raw.pairs));
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string to_dot(const ConstructionCertificate& cert) {
  std::ostringstream out;
  out << "digraph D_" << cert.f << " {\n";
  out << "  graph [label=\"g=" << cert.g << ", f=" << cert.f << ", n=" << cert.graph.order()
      << "\"];\n";
  out << "  node [shape=circle];\n";
  std::size_t path_index = 0;
  std::size_t current_level = 1;
  for (Vertex v = 0; v < cert.graph.order(); ++v) {
    const auto level = cert.level[v];
    if (level != current_level) {
      current_level = level;
      path_index = 0;
    }
    out << "  " << v << " [label=\"";
    if (level == 1)
      out << "v_" << v;
    else
      out << "s_" << ++path_index << "^(" << level << ")";
    out << "\"";
    if (v == cert.x || v == cert.y)
      out << ", style=filled, fillcolor=\"lightblue\", xlabel=\"" << (v == cert.x ? 'x' : 'y')
          << "\"";
    out << "];\n";
  }
  for (const auto& [u, v] : cert.graph.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace acyclic

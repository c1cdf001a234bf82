#pragma once

// Edge-list text format: '#' comment lines, an optional leading
// "n <count>" declaration (needed for isolated vertices), then one
// "u v" pair of 1-based vertex ids per line.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/errors.hpp"
#include "lrc/graph.hpp"

namespace lrc {

inline Graph read_edgelist(std::istream& in) {
  std::optional<int> declared_n;
  std::vector<Edge> edges;
  int max_vertex = 0;
  std::string line;
  std::size_t lineno = 0;
  bool saw_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (first == "n") {
      if (saw_data)
        throw ParseError(lineno, "\"n <count>\" must precede all edges");
      saw_data = true;
      int count;
      if (!(ls >> count)) throw ParseError(lineno, "expected vertex count");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing token " + extra);
      if (count < 1) throw ParseError(lineno, "vertex count must be positive");
      declared_n = count;
      continue;
    }
    saw_data = true;
    int u, v;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected vertex id, got " + first);
    }
    if (!(ls >> v)) throw ParseError(lineno, "expected two vertex ids");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token " + extra);
    edges.push_back(Edge(u, v));
    max_vertex = std::max({max_vertex, u, v});
  }
  int n = declared_n.value_or(max_vertex);
  if (n < 1) throw GraphError("edge list declares no vertices");
  Graph g(n);
  for (Edge e : edges) g.add_edge(e);
  return g;
}

inline void write_edgelist(std::ostream& out, const Graph& g,
                           std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "n " << g.vertex_count() << "\n";
  for (Edge e : g.edges()) out << e.u << " " << e.v << "\n";
}

inline Graph load_edgelist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edgelist(in);
}

}  // namespace lrc

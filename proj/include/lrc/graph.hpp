#pragma once

// Undirected simple graph on vertices 1..n with BFS distances and
// non-destructive edge deletion. Vertices are 1-based at every interface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

inline constexpr int kUnreachable = -1;

// Undirected edge, canonicalized so u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

// BFS distances from one source; kUnreachable marks disconnected vertices.
struct DistanceRow {
  int source = 0;
  std::vector<int> dist;  // indexed 1..n, slot 0 unused

  int operator[](int v) const { return dist[static_cast<std::size_t>(v)]; }
  bool reachable(int v) const { return (*this)[v] != kUnreachable; }
};

class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1) throw GraphError("graph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n) + 1);
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  bool has_edge(Edge e) const {
    check_vertex(e.u);
    check_vertex(e.v);
    const auto& nb = adj_[static_cast<std::size_t>(e.u)];
    return std::binary_search(nb.begin(), nb.end(), e.v);
  }

  Graph& add_edge(Edge e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw SelfLoopError(e.u);
    if (has_edge(e)) throw DuplicateEdgeError(e.u, e.v);
    insert_sorted(adj_[static_cast<std::size_t>(e.u)], e.v);
    insert_sorted(adj_[static_cast<std::size_t>(e.v)], e.u);
    ++edge_count_;
    return *this;
  }

  // Returns a copy with e removed; *this is untouched.
  Graph remove_edge(Edge e) const {
    if (e.u == e.v || !has_edge(e)) throw EdgeNotFoundError(e.u, e.v);
    Graph g = *this;
    erase_sorted(g.adj_[static_cast<std::size_t>(e.u)], e.v);
    erase_sorted(g.adj_[static_cast<std::size_t>(e.v)], e.u);
    --g.edge_count_;
    return g;
  }

  // All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 1; u <= n_; ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.push_back(Edge(u, v));
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw VertexRangeError(v, n_);
  }

 private:
  static void insert_sorted(std::vector<int>& nb, int v) {
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
  }
  static void erase_sorted(std::vector<int>& nb, int v) {
    nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

inline DistanceRow bfs_distances(const Graph& g, int source) {
  g.check_vertex(source);
  int n = g.vertex_count();
  DistanceRow row;
  row.source = source;
  row.dist.assign(static_cast<std::size_t>(n) + 1, kUnreachable);
  std::vector<int> queue(static_cast<std::size_t>(n));
  std::size_t head = 0, tail = 0;
  row.dist[static_cast<std::size_t>(source)] = 0;
  queue[tail++] = source;
  while (head < tail) {
    int u = queue[head++];
    int du = row.dist[static_cast<std::size_t>(u)];
    for (int w : g.neighbors(u)) {
      if (row.dist[static_cast<std::size_t>(w)] == kUnreachable) {
        row.dist[static_cast<std::size_t>(w)] = du + 1;
        queue[tail++] = w;
      }
    }
  }
  return row;
}

inline std::vector<DistanceRow> all_pairs_distances(const Graph& g) {
  std::vector<DistanceRow> rows;
  rows.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int s = 1; s <= g.vertex_count(); ++s)
    rows.push_back(bfs_distances(g, s));
  return rows;
}

}  // namespace lrc

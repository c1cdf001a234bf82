#pragma once

// Exact closeness C(G) = sum over ordered pairs i != j of 2^{-d(i,j)},
// per-edge-deletion closeness, and link residual closeness
// R(G) = min over edges (r,s) of C(G_{r,s}), reported with every
// minimizing edge. Unreachable pairs contribute 0.
//
// The residual sweep recomputes all-pairs BFS per deleted edge (no
// incremental APSP); the sweep over candidate edges is embarrassingly
// parallel and reduces deterministically.

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lrc/dyadic.hpp"
#include "lrc/graph.hpp"

namespace lrc {

namespace detail {

// Flat adjacency for the BFS-heavy sweep. Vertices stay 1-based.
struct CsrGraph {
  int n = 0;
  std::vector<int> offsets;  // size n+2
  std::vector<int> arcs;     // size 2E, each segment sorted
};

inline CsrGraph build_csr(const Graph& g) {
  CsrGraph csr;
  csr.n = g.vertex_count();
  csr.offsets.assign(static_cast<std::size_t>(csr.n) + 2, 0);
  csr.arcs.reserve(2 * g.edge_count());
  for (int u = 1; u <= csr.n; ++u) {
    csr.offsets[static_cast<std::size_t>(u)] =
        static_cast<int>(csr.arcs.size());
    for (int w : g.neighbors(u)) csr.arcs.push_back(w);
  }
  csr.offsets[static_cast<std::size_t>(csr.n) + 1] =
      static_cast<int>(csr.arcs.size());
  return csr;
}

// Position of arc u->v in the flat arc array.
inline int arc_index(const CsrGraph& csr, int u, int v) {
  int lo = csr.offsets[static_cast<std::size_t>(u)];
  int hi = csr.offsets[static_cast<std::size_t>(u) + 1];
  auto it = std::lower_bound(csr.arcs.begin() + lo, csr.arcs.begin() + hi, v);
  return static_cast<int>(it - csr.arcs.begin());
}

struct BfsBuffers {
  std::vector<int> dist;
  std::vector<int> queue;
  std::vector<std::int64_t> hist;  // hist[d] = number of ordered pairs at distance d
};

// Distance histogram over all ordered pairs, with arcs skip1/skip2
// (one undirected edge) excluded; pass -1 to skip nothing.
inline void distance_histogram(const CsrGraph& csr, int skip1, int skip2,
                               BfsBuffers& buf) {
  const int n = csr.n;
  buf.dist.assign(static_cast<std::size_t>(n) + 1, kUnreachable);
  buf.queue.resize(static_cast<std::size_t>(n));
  buf.hist.assign(static_cast<std::size_t>(n) + 1, 0);
  const int* offsets = csr.offsets.data();
  const int* arcs = csr.arcs.data();
  int* dist = buf.dist.data();
  int* queue = buf.queue.data();
  std::int64_t* hist = buf.hist.data();
  for (int s = 1; s <= n; ++s) {
    int head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      int du1 = dist[u] + 1;
      int end = offsets[u + 1];
      for (int ai = offsets[u]; ai < end; ++ai) {
        if (ai == skip1 || ai == skip2) continue;
        int w = arcs[ai];
        if (dist[w] == kUnreachable) {
          dist[w] = du1;
          hist[du1] += 1;
          queue[tail++] = w;
        }
      }
    }
    for (int i = 0; i < tail; ++i) dist[queue[i]] = kUnreachable;
  }
}

inline Dyadic closeness_from_histogram(const std::vector<std::int64_t>& hist) {
  int maxd = static_cast<int>(hist.size()) - 1;
  while (maxd >= 1 && hist[static_cast<std::size_t>(maxd)] == 0) --maxd;
  if (maxd < 1) return Dyadic(0);
  BigInt acc = 0;  // Horner: acc = sum_d hist[d] * 2^{maxd-d}
  for (int d = 1; d <= maxd; ++d)
    acc = (acc << 1) + hist[static_cast<std::size_t>(d)];
  return Dyadic(acc, static_cast<unsigned>(maxd));
}

inline Dyadic closeness_excluding(const CsrGraph& csr, int skip1, int skip2,
                                  BfsBuffers& buf) {
  distance_histogram(csr, skip1, skip2, buf);
  return closeness_from_histogram(buf.hist);
}

}  // namespace detail

inline Dyadic closeness(const Graph& g) {
  detail::CsrGraph csr = detail::build_csr(g);
  detail::BfsBuffers buf;
  return detail::closeness_excluding(csr, -1, -1, buf);
}

// Equals closeness(g.remove_edge(e)) exactly, without copying the graph:
// the two arcs of e are skipped during the BFS recomputation.
inline Dyadic closeness_after_link_removal(const Graph& g, Edge e) {
  if (e.u == e.v || !g.has_edge(e)) throw EdgeNotFoundError(e.u, e.v);
  detail::CsrGraph csr = detail::build_csr(g);
  detail::BfsBuffers buf;
  return detail::closeness_excluding(csr, detail::arc_index(csr, e.u, e.v),
                                     detail::arc_index(csr, e.v, e.u), buf);
}

struct ResidualReport {
  Dyadic closeness;             // C(G)
  Dyadic residual;              // R(G) = min over edges of C(G_{r,s})
  Dyadic delta;                 // C(G) - R(G), exact
  BigRational normalized;       // (C - R) / C
  std::vector<Edge> argmin_edges;  // every minimizer, lexicographic
};

inline BigRational normalized_residual(const Dyadic& c, const Dyadic& r) {
  if (c.sign() <= 0)
    throw std::domain_error("normalized residual undefined for C(G) <= 0");
  return (c - r).to_rational() / c.to_rational();
}

inline ResidualReport link_residual_closeness(const Graph& g,
                                              int workers = 1) {
  const std::vector<Edge> edges = g.edges();
  if (edges.empty())
    throw std::domain_error("link residual closeness needs at least one edge");
  detail::CsrGraph csr = detail::build_csr(g);

  std::vector<Dyadic> per_edge(edges.size());
  auto run_range = [&](std::atomic<std::size_t>& next) {
    detail::BfsBuffers buf;
    for (std::size_t i; (i = next.fetch_add(1)) < edges.size();) {
      per_edge[i] = detail::closeness_excluding(
          csr, detail::arc_index(csr, edges[i].u, edges[i].v),
          detail::arc_index(csr, edges[i].v, edges[i].u), buf);
    }
  };
  std::atomic<std::size_t> next{0};
  int w = std::clamp(workers, 1, static_cast<int>(edges.size()));
  if (w == 1) {
    run_range(next);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t)
      pool.emplace_back([&] { run_range(next); });
    for (auto& th : pool) th.join();
  }

  // Deterministic reduce in edge order, independent of worker count.
  ResidualReport report;
  report.closeness = closeness(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < per_edge.size(); ++i)
    if (per_edge[i] < per_edge[best]) best = i;
  report.residual = per_edge[best];
  for (std::size_t i = 0; i < per_edge.size(); ++i)
    if (per_edge[i] == per_edge[best]) report.argmin_edges.push_back(edges[i]);
  report.delta = report.closeness - report.residual;
  report.normalized = normalized_residual(report.closeness, report.residual);
  return report;
}

}  // namespace lrc

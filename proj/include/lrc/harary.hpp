#pragma once

// Harary graph construction H_{k,n}: a circulant ring of offsets 1..p plus
// diametral links when k is odd. All three parity cases, including the
// odd-k/odd-n case with its single degree-(k+1) vertex at q+1.

#include "lrc/errors.hpp"
#include "lrc/graph.hpp"

namespace lrc {

enum class ParityCase { EvenK, OddKEvenN, OddKOddN };

struct HararyParams {
  int k;
  int n;
  int p;  // floor(k/2), ring offset reach
  int q;  // floor(n/2), diametral offset (odd-k cases)
  ParityCase parity;

  static HararyParams validate(int k, int n) {
    if (k < 2) throw HararyParamError(k, n, "k must be at least 2");
    if (k >= n) throw HararyParamError(k, n, "k must be smaller than n");
    int p = k / 2;
    int q = n / 2;
    // Unreachable under 2 <= k < n, but fail loudly rather than dedupe a
    // ring offset that wraps onto itself.
    if (p >= (n + 1) / 2)
      throw HararyParamError(k, n, "ring offsets collide (p >= ceil(n/2))");
    ParityCase parity;
    if (k % 2 == 0)
      parity = ParityCase::EvenK;
    else
      parity = (n % 2 == 0) ? ParityCase::OddKEvenN : ParityCase::OddKOddN;
    return HararyParams{k, n, p, q, parity};
  }
};

inline Graph harary(const HararyParams& params) {
  const int n = params.n;
  const int q = params.q;
  Graph g(n);
  auto wrap = [n](int v) { return (v - 1) % n + 1; };
  for (int off = 1; off <= params.p; ++off)
    for (int i = 1; i <= n; ++i) g.add_edge(Edge(i, wrap(i + off)));
  switch (params.parity) {
    case ParityCase::EvenK:
      break;
    case ParityCase::OddKEvenN:
      for (int i = 1; i <= q; ++i) g.add_edge(Edge(i, i + q));
      break;
    case ParityCase::OddKOddN:
      // Links (i, i+q) for i in [1, q+1]; vertex q+1 picks up two of them
      // ((1, q+1) and (q+1, 2q+1)) and ends with degree k+1.
      for (int i = 1; i <= q + 1; ++i) g.add_edge(Edge(i, i + q));
      break;
  }
  return g;
}

inline Graph harary(int k, int n) {
  return harary(HararyParams::validate(k, n));
}

}  // namespace lrc

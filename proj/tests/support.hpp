#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "matchgame/graph.hpp"

namespace matchgame::testing_support {

// Reference matcher: tries every way of covering the lowest free vertex.
inline int brute_max_matching(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (Edge e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto rec = [&](auto&& self, std::uint64_t used) -> int {
    int v = 0;
    while (v < n && ((used >> v) & 1U)) ++v;
    if (v >= n) return 0;
    int best = self(self, used | (std::uint64_t{1} << v));
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!((used >> w) & 1U)) {
        best = std::max(best, 1 + self(self, used | (std::uint64_t{1} << v) | (std::uint64_t{1} << w)));
      }
    }
    return best;
  };
  return rec(rec, 0);
}

// Reference greedy written without the library types.
inline std::vector<Edge> brute_greedy(const std::vector<Edge>& stream, std::uint64_t allowed) {
  std::uint64_t used = 0;
  std::vector<Edge> out;
  for (Edge e : stream) {
    std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if ((ends & allowed) == ends && (ends & used) == 0) {
      used |= ends;
      out.push_back(e);
    }
  }
  return out;
}

struct RandomBipartite {
  Graph graph;
  std::vector<Edge> stream;
};

// Sides of size a and b, each cross pair present with probability p, edges
// shuffled into a random stream.
inline RandomBipartite random_bipartite(std::mt19937_64& rng, int a, int b, double p) {
  Bipartition bp{a, b};
  RandomBipartite out{Graph(a + b, bp), {}};
  std::bernoulli_distribution coin(p);
  for (int x = 0; x < a; ++x) {
    for (int y = a; y < a + b; ++y) {
      if (coin(rng)) {
        out.graph.add_edge(Edge(x, y));
        out.stream.push_back(Edge(x, y));
      }
    }
  }
  std::shuffle(out.stream.begin(), out.stream.end(), rng);
  return out;
}

inline std::vector<Edge> random_general(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) out.push_back(Edge(u, v));
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace matchgame::testing_support

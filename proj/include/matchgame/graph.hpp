#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "matchgame/types.hpp"

namespace matchgame {

/// A-side is [0, a_size), B-side is [a_size, a_size + b_size).
struct Bipartition {
  int a_size = 0;
  int b_size = 0;

  int n() const { return a_size + b_size; }
  bool is_a(int v) const { return v < a_size; }
  VertexSet a_side() const { return VertexSet::range(0, a_size); }
  VertexSet b_side() const { return VertexSet::range(a_size, a_size + b_size); }
  /// Vertices on the opposite side of v.
  VertexSet opposite(int v) const { return is_a(v) ? b_side() : a_side(); }
  bool crosses(Edge e) const { return is_a(e.u) != is_a(e.v); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::optional<Bipartition> bipartition = std::nullopt);
  Graph(int n, std::span<const Edge> edges, std::optional<Bipartition> bipartition = std::nullopt);

  int n() const { return n_; }
  const EdgeSet& edges() const { return edges_; }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  bool is_bipartite() const { return bipartition_.has_value(); }

  /// Throws kMalformedInput on out-of-range endpoints, kWrongGraphClass on same-side edges.
  void add_edge(Edge e);
  /// Vertices a query may pair with v: the opposite side, or everyone else.
  VertexSet partners(int v) const;

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::optional<Bipartition> bipartition_;
};

/// Ordered edge sequence without duplicates.
class EdgeStream {
 public:
  EdgeStream() = default;
  explicit EdgeStream(int n) : index_(n) {}
  EdgeStream(int n, std::span<const Edge> edges);

  int n() const { return index_.n(); }
  void push_back(Edge e);
  bool contains(Edge e) const { return index_.contains(e); }
  std::span<const Edge> edges() const { return edges_; }
  const EdgeSet& edge_set() const { return index_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const EdgeStream& a, const EdgeStream& b) { return a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  EdgeSet index_;
};

/// Vertex-disjoint edge set with a partner index.
class Matching {
 public:
  Matching() { mate_.fill(-1); }

  /// Throws kInvalidStructure if an endpoint is already matched.
  void add(Edge e);
  bool try_add(Edge e);
  bool contains(Edge e) const { return mate_[e.u] == e.v; }
  bool is_matched(int v) const { return mate_[v] >= 0; }
  std::optional<int> mate(int v) const {
    return mate_[v] >= 0 ? std::optional<int>(mate_[v]) : std::nullopt;
  }
  VertexSet covered() const { return covered_; }
  /// Sorted edges.
  std::span<const Edge> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::array<std::int8_t, kMaxVertices> mate_;
  VertexSet covered_;
};

/// Scans `stream` in order, keeping an edge iff both endpoints lie in
/// `allowed` and are still free.
Matching greedy_matching(std::span<const Edge> stream, VertexSet allowed, int n);
inline Matching greedy_matching(const EdgeStream& stream, VertexSet allowed) {
  return greedy_matching(stream.edges(), allowed, stream.n());
}

Matching max_matching_bipartite(const Graph& g);

inline constexpr int kGeneralMatchingLimit = 32;
/// Exhaustive branch and bound; refuses graphs above `limit` vertices.
Matching max_matching_general(const Graph& g, int limit = kGeneralMatchingLimit);

/// Bipartite matcher when the graph carries a bipartition, general otherwise.
Matching max_matching(const Graph& g);
/// Size-only fast path used by the search.
int max_matching_size(const EdgeSet& edges, const std::optional<Bipartition>& bipartition);

bool is_maximal(const Matching& m, const Graph& g, VertexSet subset);

/// Perfect matching of K_{n_a,n_b} minus `forbidden`, if one exists.
std::optional<Matching> perfect_matching_avoiding(int n_a, int n_b, const EdgeSet& forbidden);

}  // namespace matchgame

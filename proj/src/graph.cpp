#include "matchgame/graph.hpp"

#include <algorithm>

namespace matchgame {

Graph::Graph(int n, std::optional<Bipartition> bipartition)
    : n_(n), edges_(n), bipartition_(bipartition) {
  if (bipartition_ && bipartition_->n() != n) {
    throw Error(ErrorKind::kMalformedInput, "bipartition sizes do not add up to n");
  }
}

Graph::Graph(int n, std::span<const Edge> edges, std::optional<Bipartition> bipartition)
    : Graph(n, bipartition) {
  for (Edge e : edges) add_edge(e);
}

void Graph::add_edge(Edge e) {
  if (e.v >= n_) {
    throw Error(ErrorKind::kMalformedInput, "edge endpoint " + std::to_string(e.v) +
                                                " out of range for n=" + std::to_string(n_));
  }
  if (bipartition_ && !bipartition_->crosses(e)) {
    throw Error(ErrorKind::kWrongGraphClass, "same-side edge in a bipartite graph");
  }
  edges_.insert(e);
}

VertexSet Graph::partners(int v) const {
  if (bipartition_) return bipartition_->opposite(v);
  VertexSet all = VertexSet::range(0, n_);
  all.erase(v);
  return all;
}

EdgeStream::EdgeStream(int n, std::span<const Edge> edges) : index_(n) {
  for (Edge e : edges) push_back(e);
}

void EdgeStream::push_back(Edge e) {
  if (!index_.insert(e)) {
    throw Error(ErrorKind::kMalformedInput, "duplicate edge in stream");
  }
  edges_.push_back(e);
}

void Matching::add(Edge e) {
  if (!try_add(e)) {
    throw Error(ErrorKind::kInvalidStructure, "edges of a matching must be vertex-disjoint");
  }
}

bool Matching::try_add(Edge e) {
  if (mate_[e.u] >= 0 || mate_[e.v] >= 0) return false;
  mate_[e.u] = static_cast<std::int8_t>(e.v);
  mate_[e.v] = static_cast<std::int8_t>(e.u);
  covered_ |= e.endpoints();
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  return true;
}

Matching greedy_matching(std::span<const Edge> stream, VertexSet allowed, int n) {
  Matching m;
  VertexSet free = allowed;
  for (Edge e : stream) {
    if (e.v >= n) {
      throw Error(ErrorKind::kMalformedInput, "stream edge endpoint " + std::to_string(e.v) +
                                                  " out of range for n=" + std::to_string(n));
    }
    if (free.contains(e.u) && free.contains(e.v)) {
      m.add(e);
      free -= e.endpoints();
    }
  }
  return m;
}

namespace {

// Kuhn's augmenting-path search over A-side vertices; mate_of_b indexed by
// global vertex id.
bool augment(int a, const std::vector<VertexSet>& adj, std::array<int, kMaxVertices>& mate_of_b,
             VertexSet& visited) {
  for (int b : adj[a] - visited) {
    visited.insert(b);
    if (mate_of_b[b] < 0 || augment(mate_of_b[b], adj, mate_of_b, visited)) {
      mate_of_b[b] = a;
      return true;
    }
  }
  return false;
}

Matching bipartite_matching(int n, const EdgeSet& edges, const Bipartition& bp) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int a = 0; a < bp.a_size; ++a) adj[a] = edges.neighbors(a) & bp.b_side();
  std::array<int, kMaxVertices> mate_of_b;
  mate_of_b.fill(-1);
  for (int a = 0; a < bp.a_size; ++a) {
    VertexSet visited;
    augment(a, adj, mate_of_b, visited);
  }
  Matching m;
  for (int b : bp.b_side()) {
    if (mate_of_b[b] >= 0) m.add(Edge(mate_of_b[b], b));
  }
  return m;
}

struct BranchState {
  std::array<std::uint64_t, kMaxVertices> adj{};
  std::vector<Edge> current;
  std::vector<Edge> best;
  int upper = 0;
};

void branch(BranchState& st, VertexSet alive) {
  // isolated vertices can never be matched
  for (int v : alive) {
    if ((st.adj[v] & alive.bits()) == 0) alive.erase(v);
  }
  int current = static_cast<int>(st.current.size());
  if (alive.empty()) {
    if (current > static_cast<int>(st.best.size())) st.best = st.current;
    return;
  }
  if (current + alive.size() / 2 <= static_cast<int>(st.best.size())) return;
  if (static_cast<int>(st.best.size()) == st.upper) return;

  int v = alive.min();
  VertexSet rest = alive;
  rest.erase(v);
  for (int u : VertexSet::from_bits(st.adj[v]) & rest) {
    st.current.emplace_back(v, u);
    VertexSet next = rest;
    next.erase(u);
    branch(st, next);
    st.current.pop_back();
  }
  branch(st, rest);
}

}  // namespace

Matching max_matching_bipartite(const Graph& g) {
  if (!g.bipartition()) {
    throw Error(ErrorKind::kWrongGraphClass, "bipartite matcher needs a bipartition");
  }
  return bipartite_matching(g.n(), g.edges(), *g.bipartition());
}

Matching max_matching_general(const Graph& g, int limit) {
  if (g.n() > limit) {
    throw Error(ErrorKind::kSizeLimit, "general matcher is limited to " + std::to_string(limit) +
                                           " vertices, got " + std::to_string(g.n()));
  }
  BranchState st;
  for (int v = 0; v < g.n(); ++v) st.adj[v] = g.edges().neighbors(v).bits();
  st.upper = g.n() / 2;
  branch(st, VertexSet::range(0, g.n()));
  Matching m;
  for (Edge e : st.best) m.add(e);
  return m;
}

Matching max_matching(const Graph& g) {
  return g.is_bipartite() ? max_matching_bipartite(g) : max_matching_general(g);
}

int max_matching_size(const EdgeSet& edges, const std::optional<Bipartition>& bipartition) {
  if (bipartition) return bipartite_matching(edges.n(), edges, *bipartition).size();
  return max_matching_general(Graph(edges.n(), edges.to_vector())).size();
}

bool is_maximal(const Matching& m, const Graph& g, VertexSet subset) {
  VertexSet free = subset - m.covered();
  for (int v : free) {
    if (!(g.edges().neighbors(v) & free).empty()) return false;
  }
  return true;
}

std::optional<Matching> perfect_matching_avoiding(int n_a, int n_b, const EdgeSet& forbidden) {
  if (n_a != n_b) {
    throw Error(ErrorKind::kInvalidStructure, "perfect matching needs |A| = |B|");
  }
  Bipartition bp{n_a, n_b};
  EdgeSet allowed(bp.n());
  for (int a = 0; a < n_a; ++a) {
    for (int b : bp.b_side()) {
      if (b >= forbidden.n() || !forbidden.contains(a, b)) allowed.insert(Edge(a, b));
    }
  }
  Matching m = bipartite_matching(bp.n(), allowed, bp);
  if (m.size() != n_a) return std::nullopt;
  return m;
}

}  // namespace matchgame

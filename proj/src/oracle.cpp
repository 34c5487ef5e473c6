#include "matchgame/oracle.hpp"

#include <algorithm>

namespace matchgame {

namespace {

// Every pair of vertices in `s` that a matching could use.
template <typename F>
void for_each_pair(const std::optional<Bipartition>& bp, VertexSet s, F&& f) {
  if (bp) {
    for (int a : s & bp->a_side()) {
      for (int b : s & bp->b_side()) f(Edge(a, b));
    }
    return;
  }
  for (int u : s) {
    for (int v : s - VertexSet::range(0, u + 1)) f(Edge(u, v));
  }
}

Error fault(const std::string& what) { return Error(ErrorKind::kAdversaryFault, what); }

std::string show(Edge e, int n) { return std::to_string(e.u) + "-" + std::to_string(e.v) + " (n=" + std::to_string(n) + ")"; }

}  // namespace

StructureGraph::StructureGraph(int n, std::optional<Bipartition> bipartition)
    : n(n), bipartition(bipartition), edges(n), non_edges(n) {
  if (bipartition && bipartition->n() != n) {
    throw Error(ErrorKind::kMalformedInput, "bipartition sizes do not add up to n");
  }
}

bool StructureGraph::respects_bipartition() const {
  if (!bipartition) return true;
  for (const EdgeSet* set : {&edges, &non_edges}) {
    for (Edge e : set->to_vector()) {
      if (!bipartition->crosses(e)) return false;
    }
  }
  return true;
}

std::optional<Matching> StructureGraph::perfect_matching() const {
  if (bipartition) {
    if (bipartition->a_size != bipartition->b_size) return std::nullopt;
    return perfect_matching_avoiding(bipartition->a_size, bipartition->b_size, non_edges);
  }
  if (n % 2 != 0) return std::nullopt;
  Graph allowed(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!non_edges.contains(u, v)) allowed.add_edge(Edge(u, v));
    }
  }
  Matching m = max_matching_general(allowed);
  if (m.size() * 2 != n) return std::nullopt;
  return m;
}

bool StructureGraph::completable() const { return perfect_matching().has_value(); }

bool dominates(const StructureGraph& h, const StructureGraph& view) {
  return view.edges.is_subset_of(h.edges) && view.non_edges.is_subset_of(h.non_edges);
}

StructureGraph player_view(int n, const std::optional<Bipartition>& bipartition,
                           const PlayerHistory& history) {
  StructureGraph view(n, bipartition);
  for (const RoundRecord& r : history) {
    for (Edge e : r.response.edges()) view.edges.insert(e);
    for_each_pair(bipartition, r.query.vertices - r.response.covered(),
                  [&](Edge e) { view.non_edges.insert(e); });
  }
  return view;
}

std::vector<Edge> open_pairs(const StructureGraph& s, VertexSet vertices) {
  std::vector<Edge> out;
  for_each_pair(s.bipartition, vertices, [&](Edge e) {
    if (!s.edges.contains(e) && !s.non_edges.contains(e)) out.push_back(e);
  });
  return out;
}

OracleCommitState::OracleCommitState(int n, std::optional<Bipartition> bipartition)
    : structure(n, bipartition), stream(n), label_map(static_cast<std::size_t>(n)) {
  std::iota(label_map.begin(), label_map.end(), 0);
}

Matching prematch_committed(const OracleCommitState& state, VertexSet residual) {
  Matching m;
  for (Edge e : state.structure.edges.inside(residual)) {
    if (!state.stream.contains(e)) m.try_add(e);
  }
  return m;
}

Matching respond_with_consistency(OracleCommitState& state, VertexSet query, const ExtensionRule& rule) {
  StructureGraph& s = state.structure;
  const int n = s.n;
  if (!query.is_subset_of(VertexSet::range(0, n))) {
    throw Error(ErrorKind::kProtocol, "query names a vertex outside the game");
  }
  Matching response = greedy_matching(state.stream, query);
  VertexSet residual = query - response.covered();
  Extension ext = rule(residual);

  std::sort(ext.delivered.begin(), ext.delivered.end());
  VertexSet used;
  for (Edge e : ext.delivered) {
    if (!e.endpoints().is_subset_of(residual)) throw fault("extension edge " + show(e, n) + " leaves the residual query");
    if (!(e.endpoints() & used).empty()) throw fault("extension is not a matching at " + show(e, n));
    used |= e.endpoints();
  }
  for (const std::vector<Edge>* list : {&ext.delivered, &ext.committed, &ext.non_edges}) {
    for (Edge e : *list) {
      if (e.v >= n || !s.is_pair(e)) throw fault("extension names an invalid pair " + show(e, n));
    }
  }
  for (const std::vector<Edge>* list : {&ext.delivered, &ext.committed}) {
    for (Edge e : *list) {
      if (s.non_edges.contains(e)) throw fault("extension commits the non-edge " + show(e, n));
      s.edges.insert(e);
    }
  }
  bool grew = false;
  for (Edge e : ext.non_edges) {
    if (s.edges.contains(e)) throw fault("extension forbids the committed edge " + show(e, n));
    grew |= s.non_edges.insert(e);
  }
  for (Edge e : ext.delivered) {
    response.add(e);
    state.stream.push_back(e);
  }

  // queried vertices left unmatched can never be adjacent
  VertexSet unmatched = query - response.covered();
  for_each_pair(s.bipartition, unmatched, [&](Edge e) {
    if (s.edges.contains(e)) throw fault("committed edge " + show(e, n) + " left unmatched inside the query");
    grew |= s.non_edges.insert(e);
  });
  if (state.require_completable && grew && !s.completable()) {
    throw fault("committed non-edges leave no perfect matching");
  }
  return response;
}

EdgeStream Oracle::final_stream() const {
  EdgeStream out = delivered();
  StructureGraph s = structure();
  std::vector<Edge> rest;
  for (Edge e : s.edges.to_vector()) {
    if (!out.contains(e)) rest.push_back(e);
  }
  for (Edge e : tail_order(std::move(rest))) out.push_back(e);
  Matching pm = declared_perfect_matching();
  for (Edge e : pm.edges()) {
    if (!out.contains(e)) out.push_back(e);
  }
  return out;
}

Matching CommitOracle::respond(int round, VertexSet query) {
  return respond_with_consistency(state_, query, [&](VertexSet residual) { return extend(round, residual); });
}

Matching CommitOracle::declared_perfect_matching() const {
  if (auto pm = state_.structure.perfect_matching()) return *pm;
  throw fault(name() + ": committed non-edges leave no perfect matching");
}

Verdict verify_streaming_consistency(const Transcript& t, const VerifyOptions& options) {
  const int n = t.n;
  auto name = [&](Edge e) { return edge_name(e, n, t.naming); };
  auto fail = [](int round, std::string reason) { return Verdict{false, round, std::move(reason)}; };
  auto valid_pair = [&](Edge e) { return e.v < n && (!t.bipartition || t.bipartition->crosses(e)); };

  if (t.bipartition && t.bipartition->n() != n) return fail(0, "bipartition does not match n");
  EdgeSet stream(n);
  for (Edge e : t.final_stream.edges()) {
    if (!valid_pair(e)) return fail(0, "stream edge " + name(e) + " is not a valid pair");
    if (!stream.insert(e)) return fail(0, "stream repeats " + name(e));
  }
  EdgeSet non_edges(n);
  for (Edge e : t.committed_non_edges.to_vector()) {
    if (!valid_pair(e)) return fail(0, "non-edge " + name(e) + " is not a valid pair");
    non_edges.insert(e);
  }

  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const int round = static_cast<int>(i) + 1;
    VertexSet q = t.rounds[i].query.vertices;
    const Matching& got = t.rounds[i].response;
    if (!q.is_subset_of(VertexSet::range(0, n))) return fail(round, "query names a vertex outside the game");
    for (Edge e : got.edges()) {
      if (!e.endpoints().is_subset_of(q)) return fail(round, "response edge " + name(e) + " leaves the query");
      if (!stream.contains(e)) return fail(round, "response edge " + name(e) + " is not in the stream");
    }
    Matching expected = greedy_matching(t.final_stream.edges(), q, n);
    if (expected != got) {
      return fail(round, "response differs from greedy over the stream: expected " +
                             format_edges(expected.edges(), n, t.naming) + ", got " +
                             format_edges(got.edges(), n, t.naming));
    }
    VertexSet unmatched = q - got.covered();
    for (Edge e : stream.inside(unmatched)) {
      return fail(round, "response is not maximal: " + name(e) + " could be added");
    }
    std::optional<Edge> open;
    for_each_pair(t.bipartition, unmatched, [&](Edge e) {
      if (!open && !non_edges.contains(e)) open = e;
    });
    if (open) return fail(round, "unmatched queried pair " + name(*open) + " is not a committed non-edge");
  }

  EdgeSet expected(n);
  for (Edge e : t.committed_edges.to_vector()) {
    if (!valid_pair(e)) return fail(0, "committed edge " + name(e) + " is not a valid pair");
    if (non_edges.contains(e)) return fail(0, name(e) + " is both an edge and a non-edge");
    expected.insert(e);
  }
  for (Edge e : t.final_stream.edges()) {
    if (non_edges.contains(e)) return fail(0, "non-edge " + name(e) + " appears in the stream");
  }
  const Matching& pm = t.declared_perfect_matching;
  for (Edge e : pm.edges()) {
    if (!valid_pair(e)) return fail(0, "perfect matching edge " + name(e) + " is not a valid pair");
    if (non_edges.contains(e)) return fail(0, "perfect matching uses the non-edge " + name(e));
    expected.insert(e);
  }
  if (options.require_perfect_matching && pm.size() * 2 != n) {
    return fail(0, "declared matching covers " + std::to_string(pm.size() * 2) + " of " + std::to_string(n) +
                       " vertices");
  }
  for (Edge e : expected.to_vector()) {
    if (!stream.contains(e)) return fail(0, "committed edge " + name(e) + " is missing from the stream");
  }
  for (Edge e : stream.to_vector()) {
    if (!expected.contains(e)) return fail(0, "stream edge " + name(e) + " was never committed");
  }
  return {};
}

}  // namespace matchgame

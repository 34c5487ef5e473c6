#include "matchgame/engine.hpp"

namespace matchgame {

NormalizedQuery normalize_query(VertexSet q, std::span<const Edge> known, int n) {
  NormalizedQuery out;
  out.prematched = greedy_matching(known, q, n);
  out.reduced = q - out.prematched.covered();
  return out;
}

Game::Game(Oracle& oracle, int rounds) : oracle_(oracle) {
  if (rounds < 0) throw Error(ErrorKind::kConfiguration, "round count must be non-negative");
  ctx_.n = oracle.n();
  ctx_.bipartition = oracle.bipartition();
  ctx_.naming = oracle.naming();
  ctx_.rounds = rounds;
}

const Matching& Game::play(VertexSet query) {
  if (finished()) throw Error(ErrorKind::kProtocol, "game is over");
  const int n = ctx_.n;
  if (!query.is_subset_of(VertexSet::range(0, n))) {
    throw Error(ErrorKind::kProtocol, "query names a vertex outside [0, " + std::to_string(n) + ")");
  }
  NormalizedQuery norm = normalize_query(query, known_, n);
  Matching answer = oracle_.respond(ctx_.round, norm.reduced);
  for (Edge e : answer.edges()) {
    if (!e.endpoints().is_subset_of(norm.reduced)) {
      throw Error(ErrorKind::kOracleFault, "oracle answered with " + edge_name(e, n, ctx_.naming) +
                                               " outside the query");
    }
    if (ctx_.bipartition && !ctx_.bipartition->crosses(e)) {
      throw Error(ErrorKind::kOracleFault, "oracle answered with same-side edge " + edge_name(e, n, ctx_.naming));
    }
  }
  Matching response = norm.prematched;
  for (Edge e : answer.edges()) {
    response.add(e);
    known_.push_back(e);
  }
  history_.push_back(RoundRecord{Query{ctx_.round, query}, std::move(response)});
  ++ctx_.round;
  return history_.back().response;
}

Transcript Game::transcript() const { return make_transcript(oracle_, history_); }

Transcript make_transcript(const Oracle& oracle, const PlayerHistory& history) {
  Transcript t;
  t.n = oracle.n();
  t.naming = oracle.naming();
  t.bipartition = oracle.bipartition();
  t.oracle = oracle.name();
  t.rounds = history;
  t.final_stream = oracle.final_stream();
  StructureGraph s = oracle.structure();
  t.committed_edges = s.edges;
  t.committed_non_edges = s.non_edges;
  t.declared_perfect_matching = oracle.declared_perfect_matching();
  return t;
}

GameResult score(int n, const std::optional<Bipartition>& bipartition, const PlayerHistory& history) {
  Graph learned(n, bipartition);
  for (const RoundRecord& r : history) {
    for (Edge e : r.response.edges()) learned.add_edge(e);
  }
  GameResult result;
  result.player_matching = max_matching(learned);
  result.opt = n / 2;
  result.ratio = result.opt == 0 ? Ratio(0, 1) : Ratio(result.player_matching.size(), result.opt);
  return result;
}

GameResult score(const Transcript& t) { return score(t.n, t.bipartition, t.rounds); }

GameOutcome run_game(Player& player, Oracle& oracle, int rounds) {
  Game game(oracle, rounds);
  while (!game.finished()) {
    VertexSet q = player.next_query(game.context(), game.history());
    game.play(q);
  }
  GameOutcome out;
  out.transcript = game.transcript();
  out.result = score(out.transcript);
  return out;
}

}  // namespace matchgame

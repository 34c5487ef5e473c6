#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "matchgame/engine.hpp"

namespace matchgame {

/// Queries every vertex in round 1 and nothing afterwards.
class GreedyOncePlayer : public Player {
 public:
  std::string name() const override { return "greedy-once"; }
  VertexSet next_query(const GameContext& ctx, const PlayerHistory& history) override;
};

/// Three greedy passes: the whole graph (M), then matched A with unmatched B
/// (M_L), then unmatched A with the M-partners of A vertices matched in M_L.
class ThreeRoundMatchPlayer : public Player {
 public:
  std::string name() const override { return "3roundmatch"; }
  /// Throws kWrongGraphClass outside bipartite games.
  VertexSet next_query(const GameContext& ctx, const PlayerHistory& history) override;
};

/// Includes each vertex independently with probability `density`. The
/// generator is reseeded from (seed, round) so queries depend on nothing else.
class RandomPlayer : public Player {
 public:
  RandomPlayer(std::uint64_t seed, double density);
  std::string name() const override { return "random"; }
  VertexSet next_query(const GameContext& ctx, const PlayerHistory& history) override;

 private:
  std::uint64_t seed_;
  double density_;
};

/// Replays a fixed list of queries, then queries nothing.
class ScriptedPlayer : public Player {
 public:
  explicit ScriptedPlayer(std::vector<VertexSet> queries) : queries_(std::move(queries)) {}
  std::string name() const override { return "scripted"; }
  VertexSet next_query(const GameContext& ctx, const PlayerHistory& history) override;

 private:
  std::vector<VertexSet> queries_;
};

/// Line protocol: before each round the current view is printed, then a
/// prompt "query> ". One whitespace-separated vertex list per line; an
/// empty line is the empty query. Bad tokens re-prompt. End of input throws
/// kAborted.
class InteractivePlayer : public Player {
 public:
  InteractivePlayer(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  std::string name() const override { return "interactive"; }
  VertexSet next_query(const GameContext& ctx, const PlayerHistory& history) override;

 private:
  std::istream& in_;
  std::ostream& out_;
};

/// Text shown to a human before each round.
std::string render_view(const GameContext& ctx, const PlayerHistory& history);
/// Parses a whitespace-separated vertex list; throws kFormat.
VertexSet parse_query(const std::string& line, int n, VertexNaming naming);

}  // namespace matchgame
